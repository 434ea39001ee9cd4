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
// Multi-pattern, token-boundary-aware matching. Patterns match whole
// contiguous token subsequences only; no substring matches inside a
// token. Within each category overlaps resolve leftmost-longest;
// across categories all matches are kept.

#ifndef ARASENT_MATCHER_HPP_
#define ARASENT_MATCHER_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arasent/lexicon.hpp"
#include "arasent/tokenizer.hpp"

namespace arasent {

// Span categories cover the lexicon categories plus the two kinds of
// match that do not come from lexicon entries.
enum class SpanCategory {
  positive,
  negative,
  blocker,
  strong_positive,
  strong_negative,
  change_context,
  negation,
  preference_positive,
  preference_negative,
  question_word,
  question_mark,
  keyword,
};

std::string_view to_string(SpanCategory c);
SpanCategory span_category_of(LexiconCategory c);
bool is_polarity_span(SpanCategory c);
bool is_strong_span(SpanCategory c);

// Half-open interval on the normalized text, in codepoints, plus the
// token range it covers.
struct Span {
  size_t start = 0;
  size_t end = 0;
  size_t token_begin = 0;
  size_t token_end = 0;
  SpanCategory category = SpanCategory::keyword;
  int entry_index = -1;  // lexicon entry or keyword index; -1 for punct
  std::string surface;

  bool chars_intersect(const Span& other) const {
    return start < other.end && other.start < end;
  }
};

// Aho-Corasick automaton over interned token ids. Tokens absent from
// every pattern reset the walk to the root.
class TokenPatternSet {
 public:
  // Patterns are token sequences; returns the pattern id (insertion
  // order). Must be called before compile().
  size_t add_pattern(const std::vector<std::string>& tokens);
  void compile();

  struct Hit {
    size_t pattern_id;
    size_t token_begin;
    size_t token_end;
  };
  // All whole-token matches, every pattern, every position.
  std::vector<Hit> find_all(const std::vector<Token>& tokens) const;

  size_t pattern_count() const { return pattern_lengths_.size(); }
  // Deterministic structural fingerprint of the compiled automaton.
  uint64_t digest() const;

 private:
  std::vector<std::vector<std::string>> pending_;
  std::vector<size_t> pattern_lengths_;

  // Compiled form.
  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, int> vocab_;
  std::vector<std::vector<std::pair<int, int>>> transitions_;  // sorted by id
  std::vector<int> fail_;
  std::vector<int> output_link_;
  std::vector<std::vector<size_t>> outputs_;
  bool compiled_ = false;
};

// A compiled lexicon view: entries passing the dialect/domain filters,
// matchable against token sequences.
class Matcher {
 public:
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::vector<Span> find_matches(const std::vector<Token>& tokens) const;
  uint64_t digest() const { return patterns_.digest(); }

  // Keyword phrases share one category; the same leftmost-longest rule
  // applies among them.
  static Matcher compile_keywords(const std::vector<std::string>& phrases);

  friend Matcher compile_matcher(const Lexicon& lexicon,
                                 const std::set<Dialect>& dialect_filter,
                                 const std::set<std::string>& domain_filter);

 private:
  std::vector<LexiconEntry> entries_;
  std::vector<SpanCategory> categories_;  // per pattern
  TokenPatternSet patterns_;
};

// Keeps exactly the entries passing both filters; throws if the filtered
// set is empty.
Matcher compile_matcher(const Lexicon& lexicon,
                        const std::set<Dialect>& dialect_filter,
                        const std::set<std::string>& domain_filter);

std::vector<Span> find_matches(const std::vector<Token>& tokens,
                               const Matcher& matcher);

}  // namespace arasent

#endif  // ARASENT_MATCHER_HPP_
