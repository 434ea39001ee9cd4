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
// Romanized-Arabic ("arabizi") to Arabic script conversion: a
// character-level phrase table decoded with monotone beam search.

#ifndef ARASENT_TRANSLIT_HPP_
#define ARASENT_TRANSLIT_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace arasent {

struct PhraseOption {
  std::string target;  // Arabic character sequence (UTF-8)
  double weight;       // log-probability-like, higher is better
};

class PhraseTable {
 public:
  // Throws std::runtime_error on duplicate (source, target) pairs.
  void add(std::string_view source, std::string_view target, double weight);

  const std::vector<PhraseOption>* lookup(const std::string& source) const;
  size_t max_phrase_len() const { return max_phrase_len_; }
  size_t size() const { return entry_count_; }
  bool empty() const { return entry_count_ == 0; }

 private:
  std::map<std::string, std::vector<PhraseOption>> entries_;
  size_t max_phrase_len_ = 0;
  size_t entry_count_ = 0;
};

// Lowercase roman tokens that must never be transliterated.
class ExclusionList {
 public:
  void add(std::string_view word);
  void add_file(const std::string& path);  // one word per line, # comments
  bool contains_lower(const std::string& lower_token) const;
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct DecoderParams {
  size_t beam_width = 16;
  size_t max_phrase_len = 3;
};

// TSV: source<TAB>target<TAB>weight. Errors carry the line number.
PhraseTable load_phrase_table(const std::string& path);

// True for tokens worth decoding: ASCII letters/digits/apostrophe only,
// not purely numeric, not on the exclusion list.
bool is_candidate(std::string_view token, const ExclusionList& exclusion);

// Maximum-total-weight monotone segmentation of the token into table
// source phrases, left-to-right beam search; ties go to the
// lexicographically smallest target. Throws std::runtime_error when a
// character cannot be covered by any entry.
std::string transliterate_token(std::string_view token,
                                const PhraseTable& table,
                                const DecoderParams& params = {});

// Replaces each whitespace-delimited candidate token (lowercased before
// decoding) by its transliteration; all other tokens and the original
// spacing are preserved byte-for-byte. In lenient mode a token whose
// decoding fails is left unchanged.
std::string transliterate_text(std::string_view text, const PhraseTable& table,
                               const ExclusionList& exclusion,
                               const DecoderParams& params = {},
                               bool strict = false);

}  // namespace arasent

#endif  // ARASENT_TRANSLIT_HPP_
