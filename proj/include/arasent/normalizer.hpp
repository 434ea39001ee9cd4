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
//
// Character- and word-level normalization of dialectal Arabic text.
// Everything downstream (lexicons, matchers, fingerprints) operates on
// the canonical form this module produces.

#ifndef ARASENT_NORMALIZER_HPP_
#define ARASENT_NORMALIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

namespace arasent {

struct NormalizationOptions {
  bool unify_alef = true;         // أ إ آ ٱ -> ا
  bool unify_yeh = true;          // ى -> ي
  bool unify_heh = true;          // ة -> ه
  bool map_urdu_chars = true;     // Urdu-style heh/teh marbuta forms
  bool strip_diacritics = true;   // U+064B..U+065F removed
  bool strip_kasheeda = true;     // U+0640 removed
  bool collapse_elongation = true;
  size_t min_run_for_collapse = 3;  // must be >= 2
};

// Known word forms used to resolve elongation collapses. Members are
// stored character-normalized; multi-word entries are split so each
// word is matchable on its own.
class Vocabulary {
 public:
  void add_form(std::string_view form);
  // Splits on whitespace and adds each word.
  void add_words_of(std::string_view text);
  void add_wordlist_file(const std::string& path);  // one form per line, # comments

  bool contains(const std::u32string& form) const;
  bool empty() const { return forms_.empty(); }
  size_t size() const { return forms_.size(); }

 private:
  std::unordered_set<std::u32string> forms_;
};

// Character-level pass: unify confusable character sets, strip
// diacritics and kasheeda. Total function, order-preserving.
std::string normalize_chars(std::string_view text,
                            const NormalizationOptions& opts = {});

// Word-level pass over character-normalized text: for each token with a
// run of >= min_run_for_collapse identical characters, try candidate
// collapses (each run to one or two copies, shortest candidates first,
// ties broken lexicographically) against the vocabulary; fall back to
// collapsing every long run to a single character. Only letter and
// digit runs collapse; punctuation and emoji are left verbatim.
std::string collapse_elongation(std::string_view text, const Vocabulary& vocab,
                                const NormalizationOptions& opts = {});

// Full normalization: character pass then elongation collapse.
// Idempotent.
std::string normalize(std::string_view text, const Vocabulary& vocab,
                      const NormalizationOptions& opts = {});

}  // namespace arasent

#endif  // ARASENT_NORMALIZER_HPP_
