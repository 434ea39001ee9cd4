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

#include "arasent/matcher.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "arasent/hash.hpp"

namespace arasent {

std::string_view to_string(SpanCategory c) {
  switch (c) {
    case SpanCategory::positive: return "positive";
    case SpanCategory::negative: return "negative";
    case SpanCategory::blocker: return "blocker";
    case SpanCategory::strong_positive: return "strong_positive";
    case SpanCategory::strong_negative: return "strong_negative";
    case SpanCategory::change_context: return "change_context";
    case SpanCategory::negation: return "negation";
    case SpanCategory::preference_positive: return "preference_positive";
    case SpanCategory::preference_negative: return "preference_negative";
    case SpanCategory::question_word: return "question_word";
    case SpanCategory::question_mark: return "question_mark";
    case SpanCategory::keyword: return "keyword";
  }
  return "";
}

SpanCategory span_category_of(LexiconCategory c) {
  switch (c) {
    case LexiconCategory::positive: return SpanCategory::positive;
    case LexiconCategory::negative: return SpanCategory::negative;
    case LexiconCategory::blocker: return SpanCategory::blocker;
    case LexiconCategory::strong_positive: return SpanCategory::strong_positive;
    case LexiconCategory::strong_negative: return SpanCategory::strong_negative;
    case LexiconCategory::change_context: return SpanCategory::change_context;
    case LexiconCategory::negation: return SpanCategory::negation;
    case LexiconCategory::preference_positive:
      return SpanCategory::preference_positive;
    case LexiconCategory::preference_negative:
      return SpanCategory::preference_negative;
    case LexiconCategory::question_word: return SpanCategory::question_word;
  }
  return SpanCategory::keyword;
}

bool is_polarity_span(SpanCategory c) {
  return c == SpanCategory::positive || c == SpanCategory::negative ||
         c == SpanCategory::strong_positive ||
         c == SpanCategory::strong_negative;
}

bool is_strong_span(SpanCategory c) {
  return c == SpanCategory::strong_positive ||
         c == SpanCategory::strong_negative;
}

size_t TokenPatternSet::add_pattern(const std::vector<std::string>& tokens) {
  if (compiled_) throw std::logic_error("add_pattern after compile");
  if (tokens.empty()) throw std::invalid_argument("empty pattern");
  pending_.push_back(tokens);
  pattern_lengths_.push_back(tokens.size());
  return pending_.size() - 1;
}

void TokenPatternSet::compile() {
  // Ids assigned in first-appearance order over patterns, so the
  // automaton layout is a pure function of the pattern list.
  id_to_token_.clear();
  vocab_.clear();
  for (const auto& pattern : pending_) {
    for (const auto& token : pattern) {
      if (vocab_.emplace(token, static_cast<int>(id_to_token_.size())).second) {
        id_to_token_.push_back(token);
      }
    }
  }

  transitions_.assign(1, {});
  outputs_.assign(1, {});
  for (size_t p = 0; p < pending_.size(); ++p) {
    int state = 0;
    for (const auto& token : pending_[p]) {
      const int id = vocab_.at(token);
      auto& edges = transitions_[state];
      auto it = std::lower_bound(
          edges.begin(), edges.end(), id,
          [](const std::pair<int, int>& e, int v) { return e.first < v; });
      if (it != edges.end() && it->first == id) {
        state = it->second;
      } else {
        const int next = static_cast<int>(transitions_.size());
        edges.insert(it, {id, next});
        transitions_.push_back({});
        outputs_.push_back({});
        state = next;
      }
    }
    outputs_[state].push_back(p);
  }

  fail_.assign(transitions_.size(), 0);
  output_link_.assign(transitions_.size(), -1);
  std::deque<int> queue;
  for (const auto& [id, next] : transitions_[0]) {
    (void)id;
    fail_[next] = 0;
    queue.push_back(next);
  }
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    output_link_[state] =
        !outputs_[fail_[state]].empty() ? fail_[state] : output_link_[fail_[state]];
    for (const auto& [id, next] : transitions_[state]) {
      // Follow failure links to find the longest proper suffix state
      // with an outgoing edge on this id.
      int f = fail_[state];
      for (;;) {
        const auto& edges = transitions_[f];
        auto it = std::lower_bound(
            edges.begin(), edges.end(), id,
            [](const std::pair<int, int>& e, int v) { return e.first < v; });
        if (it != edges.end() && it->first == id) {
          fail_[next] = it->second;
          break;
        }
        if (f == 0) {
          fail_[next] = 0;
          break;
        }
        f = fail_[f];
      }
      queue.push_back(next);
    }
  }

  pending_.clear();
  pending_.shrink_to_fit();
  compiled_ = true;
}

std::vector<TokenPatternSet::Hit> TokenPatternSet::find_all(
    const std::vector<Token>& tokens) const {
  if (!compiled_) throw std::logic_error("find_all before compile");
  std::vector<Hit> hits;
  int state = 0;
  for (size_t t = 0; t < tokens.size(); ++t) {
    auto vit = vocab_.find(tokens[t].text);
    if (vit == vocab_.end()) {
      state = 0;
      continue;
    }
    const int id = vit->second;
    for (;;) {
      const auto& edges = transitions_[state];
      auto it = std::lower_bound(
          edges.begin(), edges.end(), id,
          [](const std::pair<int, int>& e, int v) { return e.first < v; });
      if (it != edges.end() && it->first == id) {
        state = it->second;
        break;
      }
      if (state == 0) break;
      state = fail_[state];
    }
    for (int s = state; s >= 0; s = output_link_[s]) {
      for (size_t p : outputs_[s]) {
        hits.push_back({p, t + 1 - pattern_lengths_[p], t + 1});
      }
    }
  }
  return hits;
}

uint64_t TokenPatternSet::digest() const {
  uint64_t h = fnv1a64("token-pattern-set");
  const auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& token : id_to_token_) h = fnv1a64(token, h);
  for (size_t s = 0; s < transitions_.size(); ++s) {
    mix(s);
    for (const auto& [id, next] : transitions_[s]) {
      mix(static_cast<uint64_t>(id));
      mix(static_cast<uint64_t>(next));
    }
    mix(static_cast<uint64_t>(fail_[s]));
    for (size_t p : outputs_[s]) mix(p);
  }
  return h;
}

namespace {

std::vector<std::string> surface_tokens(const std::string& surface) {
  const TokenizedText toks = tokenize(surface);
  std::vector<std::string> out;
  out.reserve(toks.tokens.size());
  for (const auto& t : toks.tokens) out.push_back(t.text);
  return out;
}

// Leftmost-longest sweep within one category's hit list. Hits must be
// sorted by (begin asc, end desc, pattern asc).
template <typename HitT>
std::vector<HitT> leftmost_longest(std::vector<HitT> hits) {
  std::vector<HitT> kept;
  size_t last_end = 0;
  for (const auto& h : hits) {
    if (kept.empty() || h.token_begin >= last_end) {
      kept.push_back(h);
      last_end = h.token_end;
    }
  }
  return kept;
}

}  // namespace

Matcher compile_matcher(const Lexicon& lexicon,
                        const std::set<Dialect>& dialect_filter,
                        const std::set<std::string>& domain_filter) {
  if (dialect_filter.empty() || domain_filter.empty()) {
    throw std::invalid_argument("matcher filters must be non-empty");
  }
  Matcher matcher;
  for (const auto& entry : lexicon.entries) {
    if (!dialect_filter.count(entry.dialect)) continue;
    if (!domain_filter.count(entry.domain)) continue;
    matcher.entries_.push_back(entry);
    matcher.categories_.push_back(span_category_of(entry.category));
    matcher.patterns_.add_pattern(surface_tokens(entry.surface));
  }
  if (matcher.entries_.empty()) {
    throw std::runtime_error("no lexicon entries pass the dialect/domain filters");
  }
  matcher.patterns_.compile();
  return matcher;
}

Matcher Matcher::compile_keywords(const std::vector<std::string>& phrases) {
  Matcher matcher;
  for (const auto& phrase : phrases) {
    LexiconEntry pseudo{phrase, LexiconCategory::positive, Dialect::msa,
                        "keyword"};
    matcher.entries_.push_back(pseudo);
    matcher.categories_.push_back(SpanCategory::keyword);
    matcher.patterns_.add_pattern(surface_tokens(phrase));
  }
  if (!phrases.empty()) matcher.patterns_.compile();
  return matcher;
}

std::vector<Span> Matcher::find_matches(const std::vector<Token>& tokens) const {
  std::vector<Span> result;
  if (entries_.empty() || tokens.empty()) return result;

  struct CatHit {
    size_t token_begin;
    size_t token_end;
    size_t pattern_id;
  };
  std::map<SpanCategory, std::vector<CatHit>> by_category;
  for (const auto& hit : patterns_.find_all(tokens)) {
    by_category[categories_[hit.pattern_id]].push_back(
        {hit.token_begin, hit.token_end, hit.pattern_id});
  }

  for (auto& [category, hits] : by_category) {
    std::sort(hits.begin(), hits.end(), [](const CatHit& a, const CatHit& b) {
      if (a.token_begin != b.token_begin) return a.token_begin < b.token_begin;
      if (a.token_end != b.token_end) return a.token_end > b.token_end;
      return a.pattern_id < b.pattern_id;
    });
    for (const auto& h : leftmost_longest(hits)) {
      Span span;
      span.start = tokens[h.token_begin].start;
      span.end = tokens[h.token_end - 1].end;
      span.token_begin = h.token_begin;
      span.token_end = h.token_end;
      span.category = category;
      span.entry_index = static_cast<int>(h.pattern_id);
      span.surface = entries_[h.pattern_id].surface;
      result.push_back(span);
    }
  }

  std::sort(result.begin(), result.end(), [](const Span& a, const Span& b) {
    if (a.token_begin != b.token_begin) return a.token_begin < b.token_begin;
    if (a.token_end != b.token_end) return a.token_end > b.token_end;
    return a.category < b.category;
  });
  return result;
}

std::vector<Span> find_matches(const std::vector<Token>& tokens,
                               const Matcher& matcher) {
  return matcher.find_matches(tokens);
}

}  // namespace arasent
