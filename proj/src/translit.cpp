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

#include "arasent/translit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arasent {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_roman_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'';
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

struct Hypothesis {
  double weight;
  std::string output;
};

}  // namespace

void PhraseTable::add(std::string_view source, std::string_view target,
                      double weight) {
  if (source.empty()) {
    throw std::runtime_error("phrase table: empty source sequence");
  }
  if (!std::isfinite(weight)) {
    throw std::runtime_error("phrase table: non-finite weight for '" +
                             std::string(source) + "'");
  }
  auto& options = entries_[std::string(source)];
  for (const auto& opt : options) {
    if (opt.target == target) {
      throw std::runtime_error("phrase table: duplicate pair '" +
                               std::string(source) + "' -> '" +
                               std::string(target) + "'");
    }
  }
  options.push_back({std::string(target), weight});
  max_phrase_len_ = std::max(max_phrase_len_, source.size());
  ++entry_count_;
}

const std::vector<PhraseOption>* PhraseTable::lookup(
    const std::string& source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

void ExclusionList::add(std::string_view word) {
  if (word.empty()) return;
  words_.insert(to_lower_ascii(word));
}

void ExclusionList::add_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exclusion list: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) add(w);
  }
}

bool ExclusionList::contains_lower(const std::string& lower_token) const {
  return words_.count(lower_token) != 0;
}

PhraseTable load_phrase_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open phrase table: " + path);
  PhraseTable table;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t tab1 = line.find('\t');
    const size_t tab2 = tab1 == std::string::npos
                            ? std::string::npos
                            : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected source<TAB>target<TAB>weight");
    }
    const std::string source = line.substr(0, tab1);
    const std::string target = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const std::string weight_str = line.substr(tab2 + 1);
    double weight = 0.0;
    try {
      size_t consumed = 0;
      weight = std::stod(weight_str, &consumed);
      if (consumed != weight_str.size()) throw std::invalid_argument(weight_str);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": non-numeric weight '" + weight_str + "'");
    }
    try {
      table.add(source, target, weight);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return table;
}

bool is_candidate(std::string_view token, const ExclusionList& exclusion) {
  if (token.empty()) return false;
  bool any_letter_or_apostrophe = false;
  for (char c : token) {
    if (!is_roman_char(c)) return false;
    if (!(c >= '0' && c <= '9')) any_letter_or_apostrophe = true;
  }
  if (!any_letter_or_apostrophe) return false;  // purely digits
  return !exclusion.contains_lower(to_lower_ascii(token));
}

std::string transliterate_token(std::string_view token,
                                const PhraseTable& table,
                                const DecoderParams& params) {
  const size_t n = token.size();
  if (n == 0) return std::string();
  const size_t max_len =
      std::min(params.max_phrase_len, table.max_phrase_len());
  const size_t beam_width = std::max<size_t>(1, params.beam_width);

  std::vector<std::vector<Hypothesis>> beams(n + 1);
  beams[0].push_back({0.0, std::string()});

  for (size_t pos = 0; pos < n; ++pos) {
    if (beams[pos].empty()) continue;
    for (size_t len = 1; len <= max_len && pos + len <= n; ++len) {
      const auto* options = table.lookup(std::string(token.substr(pos, len)));
      if (options == nullptr) continue;
      for (const auto& opt : *options) {
        for (const auto& hyp : beams[pos]) {
          beams[pos + len].push_back(
              {hyp.weight + opt.weight, hyp.output + opt.target});
        }
      }
    }
    // All contributions to position pos+1 have arrived once pos is
    // expanded; prune it before it becomes the next expansion point.
    auto& b = beams[pos + 1];
    std::sort(b.begin(), b.end(), [](const Hypothesis& a, const Hypothesis& c) {
      if (a.output != c.output) return a.output < c.output;
      return a.weight > c.weight;
    });
    b.erase(std::unique(b.begin(), b.end(),
                        [](const Hypothesis& a, const Hypothesis& c) {
                          return a.output == c.output;
                        }),
            b.end());
    std::sort(b.begin(), b.end(), [](const Hypothesis& a, const Hypothesis& c) {
      if (a.weight != c.weight) return a.weight > c.weight;
      return a.output < c.output;
    });
    if (b.size() > beam_width) b.resize(beam_width);
  }

  auto& final_beam = beams[n];
  std::sort(final_beam.begin(), final_beam.end(),
            [](const Hypothesis& a, const Hypothesis& c) {
              if (a.weight != c.weight) return a.weight > c.weight;
              return a.output < c.output;
            });
  if (final_beam.empty()) {
    size_t blocked = 0;
    for (size_t pos = 0; pos < n; ++pos) {
      if (!beams[pos].empty()) blocked = pos;
    }
    throw std::runtime_error(std::string("cannot transliterate: character '") +
                             std::string(1, token[blocked]) + "' at position " +
                             std::to_string(blocked) + " has no table entry");
  }
  return final_beam.front().output;
}

std::string transliterate_text(std::string_view text, const PhraseTable& table,
                               const ExclusionList& exclusion,
                               const DecoderParams& params, bool strict) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (is_ascii_space(text[i])) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && !is_ascii_space(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    if (is_candidate(token, exclusion)) {
      const std::string lowered = to_lower_ascii(token);
      try {
        out += transliterate_token(lowered, table, params);
      } catch (const std::exception&) {
        if (strict) throw;
        out += token;
      }
    } else {
      out += token;
    }
    i = j;
  }
  return out;
}

}  // namespace arasent
