// Copyright 2026 The Arasent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arasent/lexicon.hpp"

#include <fstream>
#include <stdexcept>
#include <tuple>

#include "arasent/utf8.hpp"

namespace arasent {

std::string_view to_string(LexiconCategory c) {
  switch (c) {
    case LexiconCategory::positive: return "positive";
    case LexiconCategory::negative: return "negative";
    case LexiconCategory::blocker: return "blocker";
    case LexiconCategory::strong_positive: return "strong_positive";
    case LexiconCategory::strong_negative: return "strong_negative";
    case LexiconCategory::change_context: return "change_context";
    case LexiconCategory::negation: return "negation";
    case LexiconCategory::preference_positive: return "preference_positive";
    case LexiconCategory::preference_negative: return "preference_negative";
    case LexiconCategory::question_word: return "question_word";
  }
  return "";
}

std::string_view to_string(Dialect d) {
  switch (d) {
    case Dialect::msa: return "msa";
    case Dialect::egyptian: return "egyptian";
    case Dialect::saudi: return "saudi";
  }
  return "";
}

std::optional<LexiconCategory> parse_category(std::string_view s) {
  for (LexiconCategory c :
       {LexiconCategory::positive, LexiconCategory::negative,
        LexiconCategory::blocker, LexiconCategory::strong_positive,
        LexiconCategory::strong_negative, LexiconCategory::change_context,
        LexiconCategory::negation, LexiconCategory::preference_positive,
        LexiconCategory::preference_negative, LexiconCategory::question_word}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<Dialect> parse_dialect(std::string_view s) {
  for (Dialect d : {Dialect::msa, Dialect::egyptian, Dialect::saudi}) {
    if (s == to_string(d)) return d;
  }
  return std::nullopt;
}

bool is_polarity_category(LexiconCategory c) {
  return c == LexiconCategory::positive || c == LexiconCategory::negative ||
         c == LexiconCategory::strong_positive ||
         c == LexiconCategory::strong_negative;
}

bool is_strong_category(LexiconCategory c) {
  return c == LexiconCategory::strong_positive ||
         c == LexiconCategory::strong_negative;
}

std::map<LexiconCategory, size_t> Lexicon::category_counts() const {
  std::map<LexiconCategory, size_t> counts;
  for (const auto& e : entries) ++counts[e.category];
  return counts;
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<std::string> words;
  size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space_char(cps[i])) ++i;
    size_t j = i;
    while (j < cps.size() && !is_space_char(cps[j])) ++j;
    if (j > i) words.push_back(utf8::encode(cps.substr(i, j - i)));
    i = j;
  }
  return words;
}

// Collapses internal whitespace runs to single spaces and trims, so the
// stored surface matches its own tokenization.
std::string canonical_surface(const std::string& normalized) {
  std::string out;
  for (const auto& word : split_words(normalized)) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

size_t count_words(const std::string& surface) {
  return split_words(surface).size();
}

}  // namespace

Lexicon load_lexicon(const std::vector<std::string>& paths) {
  Lexicon lexicon;
  const Vocabulary no_vocab;
  std::set<std::tuple<std::string, LexiconCategory, Dialect>> seen;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    lexicon.provenance.push_back(path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto where = [&] { return path + ":" + std::to_string(lineno); };

      std::vector<std::string> fields;
      size_t start = 0;
      for (size_t tab = line.find('\t'); tab != std::string::npos;
           tab = line.find('\t', start)) {
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
      }
      fields.push_back(line.substr(start));
      if (fields.size() != 4) {
        throw std::runtime_error(
            where() + ": expected surface<TAB>category<TAB>dialect<TAB>domain");
      }

      const auto category = parse_category(fields[1]);
      if (!category) {
        throw std::runtime_error(where() + ": unknown category '" + fields[1] +
                                 "'");
      }
      const auto dialect = parse_dialect(fields[2]);
      if (!dialect) {
        throw std::runtime_error(where() + ": unknown dialect '" + fields[2] +
                                 "'");
      }

      const std::string surface =
          canonical_surface(normalize(fields[0], no_vocab));
      if (surface.empty()) {
        throw std::runtime_error(where() + ": surface empty after normalization");
      }
      const size_t words = count_words(surface);
      if (words > kMaxSurfaceTokens) {
        throw std::runtime_error(where() + ": surface longer than " +
                                 std::to_string(kMaxSurfaceTokens) + " tokens");
      }

      const auto key = std::make_tuple(surface, *category, *dialect);
      if (!seen.insert(key).second) {
        lexicon.warnings.push_back(
            {path, lineno, "duplicate entry '" + surface + "' collapsed"});
        continue;
      }
      lexicon.entries.push_back({surface, *category, *dialect, fields[3]});
    }
  }
  return lexicon;
}

void add_lexicon_to_vocabulary(const Lexicon& lexicon, Vocabulary& vocab) {
  for (const auto& entry : lexicon.entries) {
    vocab.add_words_of(entry.surface);
  }
}

}  // namespace arasent
