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

#include "arasent/normalizer.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "arasent/utf8.hpp"

namespace arasent {

namespace {

constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefHamzaAbove = 0x0623;
constexpr char32_t kAlefHamzaBelow = 0x0625;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kAlefWasla = 0x0671;
constexpr char32_t kAlefMaksura = 0x0649;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kHeh = 0x0647;
constexpr char32_t kUrduHeh = 0x06C1;
constexpr char32_t kUrduTehMarbuta = 0x06C3;
constexpr char32_t kKasheeda = 0x0640;

bool is_diacritic(char32_t cp) { return cp >= 0x064B && cp <= 0x065F; }

// Characters eligible for elongation collapsing. Punctuation and emoji
// runs are kept verbatim (question marks carry meaning downstream).
bool is_collapsible(char32_t cp) {
  return is_arabic_letter(cp) || is_ascii_letter(cp) || is_digit_char(cp);
}

struct Run {
  size_t start;
  size_t len;
  bool collapsible;
};

std::vector<Run> find_runs(const std::u32string& token) {
  std::vector<Run> runs;
  size_t i = 0;
  while (i < token.size()) {
    size_t j = i + 1;
    while (j < token.size() && token[j] == token[i]) ++j;
    runs.push_back({i, j - i, is_collapsible(token[i])});
    i = j;
  }
  return runs;
}

// Rebuilds the token with each long collapsible run shortened to the
// chosen repeat count; everything else is copied verbatim.
std::u32string rebuild(const std::u32string& token, const std::vector<Run>& runs,
                       const std::vector<size_t>& long_run_idx,
                       const std::vector<size_t>& counts) {
  std::u32string out;
  out.reserve(token.size());
  size_t next_long = 0;
  for (size_t r = 0; r < runs.size(); ++r) {
    size_t len = runs[r].len;
    if (next_long < long_run_idx.size() && long_run_idx[next_long] == r) {
      len = counts[next_long];
      ++next_long;
    }
    out.append(len, token[runs[r].start]);
  }
  return out;
}

// Cross-product enumeration is capped; beyond the cap the fallback rule
// applies directly.
constexpr size_t kMaxEnumeratedRuns = 10;

std::u32string collapse_token(const std::u32string& token,
                              const Vocabulary& vocab,
                              const NormalizationOptions& opts) {
  const auto runs = find_runs(token);
  std::vector<size_t> long_runs;
  for (size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].collapsible && runs[r].len >= opts.min_run_for_collapse) {
      long_runs.push_back(r);
    }
  }
  if (long_runs.empty()) return token;

  if (!vocab.empty() && long_runs.size() <= kMaxEnumeratedRuns) {
    std::vector<std::u32string> candidates;
    candidates.reserve(size_t{1} << long_runs.size());
    std::vector<size_t> counts(long_runs.size(), 1);
    for (size_t mask = 0; mask < (size_t{1} << long_runs.size()); ++mask) {
      for (size_t b = 0; b < long_runs.size(); ++b) {
        counts[b] = (mask >> b) & 1 ? 2 : 1;
      }
      candidates.push_back(rebuild(token, runs, long_runs, counts));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const std::u32string& a, const std::u32string& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    for (const auto& cand : candidates) {
      if (vocab.contains(cand)) return cand;
    }
  }

  // Fallback: every long run becomes a single character.
  std::vector<size_t> ones(long_runs.size(), 1);
  return rebuild(token, runs, long_runs, ones);
}

}  // namespace

void Vocabulary::add_form(std::string_view form) {
  if (form.empty()) return;
  forms_.insert(utf8::decode(normalize_chars(form)));
}

void Vocabulary::add_words_of(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space_char(cps[i])) ++i;
    size_t j = i;
    while (j < cps.size() && !is_space_char(cps[j])) ++j;
    if (j > i) add_form(utf8::encode(cps.substr(i, j - i)));
    i = j;
  }
}

void Vocabulary::add_wordlist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open wordlist file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    add_words_of(line);
  }
}

bool Vocabulary::contains(const std::u32string& form) const {
  return forms_.count(form) != 0;
}

std::string normalize_chars(std::string_view text,
                            const NormalizationOptions& opts) {
  const std::u32string cps = utf8::decode(text);
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (opts.map_urdu_chars) {
      if (cp == kUrduHeh) cp = kHeh;
      if (cp == kUrduTehMarbuta) cp = kTehMarbuta;
    }
    if (opts.unify_alef && (cp == kAlefHamzaAbove || cp == kAlefHamzaBelow ||
                            cp == kAlefMadda || cp == kAlefWasla)) {
      cp = kAlef;
    }
    if (opts.unify_yeh && cp == kAlefMaksura) cp = kYeh;
    if (opts.unify_heh && cp == kTehMarbuta) cp = kHeh;
    if (opts.strip_diacritics && is_diacritic(cp)) continue;
    if (opts.strip_kasheeda && cp == kKasheeda) continue;
    out.push_back(cp);
  }
  return utf8::encode(out);
}

std::string collapse_elongation(std::string_view text, const Vocabulary& vocab,
                                const NormalizationOptions& opts) {
  const std::u32string cps = utf8::decode(text);
  std::u32string out;
  out.reserve(cps.size());
  size_t i = 0;
  while (i < cps.size()) {
    if (is_space_char(cps[i])) {
      out.push_back(cps[i]);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < cps.size() && !is_space_char(cps[j])) ++j;
    out.append(collapse_token(cps.substr(i, j - i), vocab, opts));
    i = j;
  }
  return utf8::encode(out);
}

std::string normalize(std::string_view text, const Vocabulary& vocab,
                      const NormalizationOptions& opts) {
  std::string chars = normalize_chars(text, opts);
  if (!opts.collapse_elongation) return chars;
  return collapse_elongation(chars, vocab, opts);
}

}  // namespace arasent
