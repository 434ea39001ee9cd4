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
#include <map>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "arasent/utf8.hpp"

using namespace arasent;

namespace {

Lexicon make_lexicon(std::vector<LexiconEntry> entries) {
  Lexicon lexicon;
  lexicon.entries = std::move(entries);
  return lexicon;
}

const std::set<Dialect> kAllDialects = {Dialect::msa, Dialect::egyptian,
                                        Dialect::saudi};
const std::set<std::string> kGeneral = {"general"};

// Independent oracle: O(entries x tokens) window scan with the same
// per-category leftmost-longest rule, no automaton involved.
std::vector<Span> naive_find(const std::vector<Token>& tokens,
                             const std::vector<LexiconEntry>& entries) {
  struct Hit {
    size_t begin, end, entry;
  };
  std::map<SpanCategory, std::vector<Hit>> by_cat;
  for (size_t e = 0; e < entries.size(); ++e) {
    const TokenizedText pattern = tokenize(entries[e].surface);
    const size_t plen = pattern.tokens.size();
    if (plen == 0 || plen > tokens.size()) continue;
    for (size_t start = 0; start + plen <= tokens.size(); ++start) {
      bool match = true;
      for (size_t k = 0; k < plen; ++k) {
        if (tokens[start + k].text != pattern.tokens[k].text) {
          match = false;
          break;
        }
      }
      if (match) {
        by_cat[span_category_of(entries[e].category)].push_back(
            {start, start + plen, e});
      }
    }
  }
  std::vector<Span> result;
  for (auto& [cat, hits] : by_cat) {
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
      if (a.begin != b.begin) return a.begin < b.begin;
      if (a.end != b.end) return a.end > b.end;
      return a.entry < b.entry;
    });
    size_t last_end = 0;
    bool first = true;
    for (const Hit& h : hits) {
      if (!first && h.begin < last_end) continue;
      first = false;
      last_end = h.end;
      Span span;
      span.start = tokens[h.begin].start;
      span.end = tokens[h.end - 1].end;
      span.token_begin = h.begin;
      span.token_end = h.end;
      span.category = cat;
      span.entry_index = static_cast<int>(h.entry);
      span.surface = entries[h.entry].surface;
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

bool same_spans(const std::vector<Span>& a, const std::vector<Span>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].token_begin != b[i].token_begin) return false;
    if (a[i].token_end != b[i].token_end) return false;
    if (a[i].category != b[i].category) return false;
    if (a[i].entry_index != b[i].entry_index) return false;
    if (a[i].start != b[i].start) return false;
    if (a[i].end != b[i].end) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("matcher");

TEST_CASE("blocker and polarity overlap is reported for both categories") {
  const Lexicon lexicon = make_lexicon({
      {"صباح الخير", LexiconCategory::blocker, Dialect::msa, "general"},
      {"الخير", LexiconCategory::positive, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const TokenizedText doc = tokenize("صباح الخير");
  const auto spans = find_matches(doc.tokens, matcher);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].category == SpanCategory::blocker);
  CHECK(spans[0].start == 0);
  CHECK(spans[0].end == 10);
  CHECK(spans[1].category == SpanCategory::positive);
  CHECK(spans[1].start == 5);
  CHECK(spans[1].end == 10);
}

TEST_CASE("whole-token rule: no match inside a longer token") {
  const Lexicon lexicon = make_lexicon({
      {"الخير", LexiconCategory::positive, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const TokenizedText doc = tokenize("الخيرات كلها");
  CHECK(find_matches(doc.tokens, matcher).empty());
}

TEST_CASE("leftmost-longest within a category") {
  const Lexicon lexicon = make_lexicon({
      {"اوي حلو", LexiconCategory::positive, Dialect::egyptian, "general"},
      {"حلو", LexiconCategory::positive, Dialect::egyptian, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const auto spans = find_matches(tokenize("اوي حلو").tokens, matcher);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].surface == "اوي حلو");
  CHECK(spans[0].token_begin == 0);
  CHECK(spans[0].token_end == 2);
}

TEST_CASE("dialect and domain filters select the compiled subset") {
  const Lexicon lexicon = make_lexicon({
      {"جميل", LexiconCategory::positive, Dialect::msa, "general"},
      {"زين", LexiconCategory::positive, Dialect::saudi, "general"},
      {"تقطيع", LexiconCategory::negative, Dialect::msa, "teleco"},
      {"جامد", LexiconCategory::positive, Dialect::egyptian, "general"},
  });
  const Matcher matcher = compile_matcher(
      lexicon, {Dialect::msa, Dialect::egyptian}, {"general"});
  CHECK(matcher.entries().size() == 2);
  CHECK(find_matches(tokenize("زين").tokens, matcher).empty());
  CHECK(find_matches(tokenize("جميل").tokens, matcher).size() == 1);

  CHECK_THROWS_AS(compile_matcher(lexicon, {Dialect::saudi}, {"teleco"}),
                  std::runtime_error);
}

TEST_CASE("recompiling yields an identical automaton") {
  const Lexicon lexicon = make_lexicon({
      {"جميل", LexiconCategory::positive, Dialect::msa, "general"},
      {"صباح الخير", LexiconCategory::blocker, Dialect::msa, "general"},
      {"جدا جميل", LexiconCategory::positive, Dialect::msa, "general"},
  });
  const Matcher a = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher b = compile_matcher(lexicon, kAllDialects, kGeneral);
  CHECK(a.digest() == b.digest());
  CHECK(a.digest() != 0);
}

TEST_CASE("punctuation inside text blocks phrase contiguity") {
  const Lexicon lexicon = make_lexicon({
      {"صباح الخير", LexiconCategory::blocker, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  CHECK(find_matches(tokenize("صباح، الخير").tokens, matcher).empty());
  CHECK(find_matches(tokenize("صباح. الخير").tokens, matcher).empty());
}

TEST_CASE("matches repeat at every occurrence") {
  const Lexicon lexicon = make_lexicon({
      {"جميل", LexiconCategory::positive, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const auto spans = find_matches(tokenize("جميل جدا جميل").tokens, matcher);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].token_begin == 0);
  CHECK(spans[1].token_begin == 2);
}

TEST_CASE("oracle equivalence on 1000 random lexicon/text pairs") {
  // Small shared word pool so patterns actually occur in the texts.
  const std::vector<std::string> words = {
      "جميل", "حلو",  "سيء",  "قرف", "صباح", "الخير", "جدا",
      "مش",   "لكن",  "هل",   "زين", "وحش",  "خدمه",  "النت",
      "اوي",  "مره",  "عمل",  "يوم", "كلام", "ناس"};
  const std::vector<LexiconCategory> cats = {
      LexiconCategory::positive,      LexiconCategory::negative,
      LexiconCategory::blocker,       LexiconCategory::strong_positive,
      LexiconCategory::strong_negative, LexiconCategory::change_context,
      LexiconCategory::negation,      LexiconCategory::question_word,
      LexiconCategory::preference_positive,
      LexiconCategory::preference_negative};
  std::mt19937_64 rng(90210);

  for (int trial = 0; trial < 1000; ++trial) {
    const size_t entry_count = 1 + rng() % 50;
    std::vector<LexiconEntry> entries;
    std::set<std::tuple<std::string, LexiconCategory, Dialect>> seen;
    while (entries.size() < entry_count) {
      const size_t len = 1 + rng() % 3;
      std::string surface;
      for (size_t i = 0; i < len; ++i) {
        if (i > 0) surface += ' ';
        surface += words[rng() % words.size()];
      }
      const LexiconCategory cat = cats[rng() % cats.size()];
      if (!seen.insert({surface, cat, Dialect::msa}).second) continue;
      entries.push_back({surface, cat, Dialect::msa, "general"});
    }
    const Lexicon lexicon = make_lexicon(entries);
    const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);

    const size_t text_len = rng() % 41;
    std::string text;
    for (size_t i = 0; i < text_len; ++i) {
      if (i > 0) text += ' ';
      text += words[rng() % words.size()];
    }
    const TokenizedText doc = tokenize(text);
    const auto got = find_matches(doc.tokens, matcher);
    const auto expected = naive_find(doc.tokens, matcher.entries());
    CAPTURE(trial);
    CAPTURE(text);
    CHECK(same_spans(got, expected));

    // Offset validity: the span's character range slices the text to
    // exactly the matched tokens joined by single spaces.
    const auto cps = utf8::decode(text);
    for (const Span& span : got) {
      std::string joined;
      for (size_t t = span.token_begin; t < span.token_end; ++t) {
        if (t > span.token_begin) joined += ' ';
        joined += doc.tokens[t].text;
      }
      CHECK(utf8::encode(cps.substr(span.start, span.end - span.start)) ==
            joined);
    }
  }
}

TEST_CASE("keyword matcher applies the same whole-token semantics") {
  const Matcher keywords =
      Matcher::compile_keywords({"اي دي اس ال", "الخدمه"});
  const auto spans =
      find_matches(tokenize("سرعه اي دي اس ال ضعيفه").tokens, keywords);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].category == SpanCategory::keyword);
  CHECK(spans[0].token_begin == 1);
  CHECK(spans[0].token_end == 5);
  CHECK(find_matches(tokenize("خدمه").tokens, keywords).empty());
}

TEST_SUITE_END();
