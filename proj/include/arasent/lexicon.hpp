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
// Sentiment lexicon loading and validation. Surfaces are re-normalized
// on load so lexicon files may be written in unnormalized forms.

#ifndef ARASENT_LEXICON_HPP_
#define ARASENT_LEXICON_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arasent/normalizer.hpp"

namespace arasent {

enum class LexiconCategory {
  positive,
  negative,
  blocker,
  strong_positive,
  strong_negative,
  change_context,
  negation,
  preference_positive,  // keyword before the term reads positive
  preference_negative,  // keyword before the term reads negative
  question_word,
};

enum class Dialect { msa, egyptian, saudi };

std::string_view to_string(LexiconCategory c);
std::string_view to_string(Dialect d);
std::optional<LexiconCategory> parse_category(std::string_view s);
std::optional<Dialect> parse_dialect(std::string_view s);

bool is_polarity_category(LexiconCategory c);
bool is_strong_category(LexiconCategory c);

struct LexiconEntry {
  std::string surface;  // normalized, 1..6 whitespace-separated tokens
  LexiconCategory category;
  Dialect dialect;
  std::string domain;  // free tag, e.g. "teleco", "general"
};

struct LexiconWarning {
  std::string file;
  size_t line;
  std::string message;
};

struct Lexicon {
  std::vector<LexiconEntry> entries;
  std::vector<std::string> provenance;       // source file paths
  std::vector<LexiconWarning> warnings;      // duplicate collapses etc.

  std::map<LexiconCategory, size_t> category_counts() const;
};

inline constexpr size_t kMaxSurfaceTokens = 6;

// TSV: surface<TAB>category<TAB>dialect<TAB>domain; # comments allowed.
// Surfaces are normalized with the fallback elongation rule (no
// vocabulary), which makes them fixed points of normalize() under any
// vocabulary. Duplicate (surface, category, dialect) triples collapse
// to the first occurrence with a warning. Unknown category or dialect
// values throw with the file and line number.
Lexicon load_lexicon(const std::vector<std::string>& paths);

// Adds every word of every surface to a vocabulary, so elongated
// variants of lexicon words collapse back to them.
void add_lexicon_to_vocabulary(const Lexicon& lexicon, Vocabulary& vocab);

}  // namespace arasent

#endif  // ARASENT_LEXICON_HPP_
