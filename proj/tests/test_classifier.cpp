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

#include "arasent/classifier.hpp"

#include <random>

#include <doctest.h>

#include <nlohmann/json.hpp>

using namespace arasent;

namespace {

const std::string kDataDir = ARASENT_DATA_DIR;

const Resources& teleco_resources() {
  static const Resources* res = [] {
    const RunConfig config =
        load_run_config(kDataDir + "/configs/teleco.json");
    return new Resources(load_resources(config));
  }();
  return *res;
}

const PipelineConfig& teleco_pipeline() {
  static const PipelineConfig* config = [] {
    return new PipelineConfig(
        load_run_config(kDataDir + "/configs/teleco.json").pipeline);
  }();
  return *config;
}

Lexicon make_lexicon(std::vector<LexiconEntry> entries) {
  Lexicon lexicon;
  lexicon.entries = std::move(entries);
  return lexicon;
}

const std::set<Dialect> kAllDialects = {Dialect::msa, Dialect::egyptian,
                                        Dialect::saudi};
const std::set<std::string> kGeneral = {"general"};

DocumentRecord doc(const std::string& id, const std::string& text) {
  DocumentRecord record;
  record.id = id;
  record.text = text;
  record.source = Source::twitter;
  return record;
}

}  // namespace

TEST_SUITE_BEGIN("classifier");

TEST_CASE("extract partitions matches by category") {
  const Lexicon lexicon = make_lexicon({
      {"صباح الخير", LexiconCategory::blocker, Dialect::msa, "general"},
      {"الخير", LexiconCategory::positive, Dialect::msa, "general"},
      {"لكن", LexiconCategory::change_context, Dialect::msa, "general"},
      {"مش", LexiconCategory::negation, Dialect::egyptian, "general"},
      {"هل", LexiconCategory::question_word, Dialect::msa, "general"},
      {"افضل من", LexiconCategory::preference_positive, Dialect::msa,
       "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"الخدمه"});

  SUBCASE("blocker and polarity overlap both visible") {
    const auto ex = extract(tokenize("صباح الخير"), matcher, keywords);
    REQUIRE(ex.polarity_spans.size() == 1);
    REQUIRE(ex.blocker_spans.size() == 1);
    CHECK(ex.polarity_spans[0].surface == "الخير");
    CHECK(ex.blocker_spans[0].surface == "صباح الخير");
  }
  SUBCASE("question marks and question words both extract") {
    const auto ex = extract(tokenize("هل الخدمه زينه ؟"), matcher, keywords);
    CHECK(ex.question_spans.size() == 2);
    CHECK(ex.keyword_spans.size() == 1);
  }
  SUBCASE("no hits means empty lists") {
    const auto ex = extract(tokenize("كلام عادي تماما"), matcher, keywords);
    CHECK(ex.polarity_spans.empty());
    CHECK(ex.blocker_spans.empty());
    CHECK(ex.question_spans.empty());
    CHECK(ex.change_context_spans.empty());
    CHECK(ex.negation_spans.empty());
    CHECK(ex.preference_spans.empty());
    CHECK(ex.keyword_spans.empty());
  }
}

TEST_CASE("exclusion rule 1: blocker overlap discards the polarity term") {
  const Lexicon lexicon = make_lexicon({
      {"صباح الخير", LexiconCategory::blocker, Dialect::msa, "general"},
      {"الخير", LexiconCategory::positive, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"x"});
  const auto ex = extract(tokenize("صباح الخير"), matcher, keywords);
  CHECK(exclude(ex, PipelineConfig{}).empty());
}

TEST_CASE("exclusion rule 2: questions suppress all but strong polarity") {
  const Lexicon lexicon = make_lexicon({
      {"ايه القرف ده", LexiconCategory::strong_negative, Dialect::egyptian,
       "general"},
      {"جيده", LexiconCategory::positive, Dialect::msa, "general"},
      {"هل", LexiconCategory::question_word, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"الخدمه"});

  SUBCASE("strong polarity survives a question") {
    const auto ex = extract(tokenize("ايه القرف ده؟"), matcher, keywords);
    REQUIRE(ex.question_spans.size() == 1);
    const auto survivors = exclude(ex, PipelineConfig{});
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0].category == SpanCategory::strong_negative);
  }
  SUBCASE("ordinary polarity in a question sentence is dropped") {
    const auto ex = extract(tokenize("هل الخدمه جيده؟"), matcher, keywords);
    CHECK(!ex.polarity_spans.empty());
    CHECK(exclude(ex, PipelineConfig{}).empty());
  }
  SUBCASE("sentence scope only affects the question sentence") {
    const auto ex =
        extract(tokenize("هل الخدمه جيده؟ الخدمه جيده."), matcher, keywords);
    const auto survivors = exclude(ex, PipelineConfig{});
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0].token_begin == 5);
  }
  SUBCASE("document scope suppresses everywhere") {
    PipelineConfig config;
    config.question_scope = QuestionScope::document;
    const auto ex =
        extract(tokenize("هل الخدمه جيده؟ الخدمه جيده."), matcher, keywords);
    CHECK(exclude(ex, config).empty());
  }
}

TEST_CASE("negation flips effective polarity inside the window") {
  const Lexicon lexicon = make_lexicon({
      {"جميل", LexiconCategory::positive, Dialect::msa, "general"},
      {"مش", LexiconCategory::negation, Dialect::egyptian, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"x"});
  PipelineConfig config;
  config.negation_window = 2;

  const auto run = [&](const std::string& text) {
    const TokenizedText toks = tokenize(text);
    const auto ex = extract(toks, matcher, keywords);
    return apply_negation(exclude(ex, config), ex.negation_spans, toks, config);
  };

  SUBCASE("adjacent negation flips") {
    const auto spans = run("مش جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::negative);
    CHECK(spans[0].base() == Label::positive);
  }
  SUBCASE("no negation leaves polarity unchanged") {
    const auto spans = run("جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::positive);
  }
  SUBCASE("one intervening token still flips with window 2") {
    const auto spans = run("مش شكله جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::negative);
  }
  SUBCASE("negation three tokens away is out of window") {
    const auto spans = run("مش كان شكله جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::positive);
  }
  SUBCASE("negation in a previous sentence does not reach") {
    const auto spans = run("مش. جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::positive);
  }
  SUBCASE("double negation restores the original polarity") {
    const auto spans = run("مش مش جميل");
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].effective() == Label::positive);
  }
}

TEST_CASE("linkage rule 1: proximity with no conflicting polarity between") {
  const Lexicon lexicon = make_lexicon({
      {"جميله", LexiconCategory::positive, Dialect::msa, "general"},
      {"سيئه", LexiconCategory::negative, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"الخدمه"});
  PipelineConfig config;
  config.linkage_window = 5;

  const auto run = [&](const std::string& text) {
    const TokenizedText toks = tokenize(text);
    const auto ex = extract(toks, matcher, keywords);
    const auto survivors =
        apply_negation(exclude(ex, config), ex.negation_spans, toks, config);
    return link(ex, survivors, toks, config);
  };

  SUBCASE("adjacent keyword and polarity link") {
    const auto links = run("الخدمه جميله");
    REQUIRE(links.size() == 1);
    CHECK(links[0].rule == LinkRule::proximity);
    CHECK(links[0].polarity == Label::positive);
    CHECK(links[0].keyword_span.surface == "الخدمه");
  }
  SUBCASE("six tokens of separation exceeds window five") {
    const auto links = run("الخدمه كانت طول الوقت من زمان فعلا جميله");
    CHECK(links.empty());
  }
  SUBCASE("five tokens of separation is within the window") {
    const auto links = run("الخدمه كانت طول الوقت من زمان جميله");
    CHECK(links.size() == 1);
  }
  SUBCASE("conflicting polarity between keyword and candidate blocks") {
    const auto links = run("الخدمه سيئه بعدين جميله");
    REQUIRE(links.size() == 1);  // only the nearer, unconflicted link
    CHECK(links[0].polarity == Label::negative);
  }
  SUBCASE("different sentences never link") {
    const auto links = run("الخدمه ممتازه. جميله");
    CHECK(links.empty());  // ممتازه is not in this lexicon; جميله is next sentence
  }
}

TEST_CASE("linkage rule 2: preference polarizes before and after keywords") {
  const Lexicon lexicon = make_lexicon({
      {"افضل من", LexiconCategory::preference_positive, Dialect::msa,
       "general"},
      {"اسوا من", LexiconCategory::preference_negative, Dialect::msa,
       "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords =
      Matcher::compile_keywords({"فودافون", "موبينيل"});
  PipelineConfig config;

  const auto run = [&](const std::string& text) {
    const TokenizedText toks = tokenize(text);
    const auto ex = extract(toks, matcher, keywords);
    const auto survivors =
        apply_negation(exclude(ex, config), ex.negation_spans, toks, config);
    return link(ex, survivors, toks, config);
  };

  SUBCASE("A better than B") {
    const auto links = run("فودافون افضل من موبينيل");
    REQUIRE(links.size() == 2);
    CHECK(links[0].keyword_span.surface == "فودافون");
    CHECK(links[0].polarity == Label::positive);
    CHECK(links[0].rule == LinkRule::preference);
    CHECK(links[1].keyword_span.surface == "موبينيل");
    CHECK(links[1].polarity == Label::negative);
  }
  SUBCASE("A worse than B mirrors") {
    const auto links = run("فودافون اسوا من موبينيل");
    REQUIRE(links.size() == 2);
    CHECK(links[0].polarity == Label::negative);
    CHECK(links[1].polarity == Label::positive);
  }
  SUBCASE("preference with no keyword after does not fire") {
    CHECK(run("فودافون افضل من الباقي").empty());
  }
}

TEST_CASE("linkage rule 3: conjunction copies polarity across keywords") {
  const Lexicon lexicon = make_lexicon({
      {"صعبين", LexiconCategory::negative, Dialect::msa, "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords =
      Matcher::compile_keywords({"فودافون", "موبينيل"});
  PipelineConfig config;

  const auto run = [&](const std::string& text) {
    const TokenizedText toks = tokenize(text);
    const auto ex = extract(toks, matcher, keywords);
    const auto survivors =
        apply_negation(exclude(ex, config), ex.negation_spans, toks, config);
    return link(ex, survivors, toks, config);
  };

  SUBCASE("both conjoined keywords read the shared polarity") {
    const auto links = run("فودافون و موبينيل صعبين");
    REQUIRE(links.size() == 2);
    CHECK(links[0].keyword_span.surface == "فودافون");
    CHECK(links[0].polarity == Label::negative);
    CHECK(links[1].keyword_span.surface == "موبينيل");
    CHECK(links[1].polarity == Label::negative);
  }
  SUBCASE("conjunction reaches keywords beyond the proximity window") {
    const auto links =
        run("فودافون و موبينيل في الفتره الاخيره بقوا صعبين");
    REQUIRE(links.size() == 2);
    bool saw_conjunction = false;
    for (const auto& l : links) {
      CHECK(l.polarity == Label::negative);
      if (l.rule == LinkRule::conjunction) saw_conjunction = true;
    }
    CHECK(saw_conjunction);
  }
}

TEST_CASE("aggregation: contrast, majority, strong double weight") {
  const Lexicon lexicon = make_lexicon({
      {"رائع", LexiconCategory::positive, Dialect::msa, "general"},
      {"متكامل", LexiconCategory::positive, Dialect::msa, "general"},
      {"ومفيد", LexiconCategory::positive, Dialect::msa, "general"},
      {"ينقصه", LexiconCategory::negative, Dialect::msa, "general"},
      {"عدم توفير", LexiconCategory::negative, Dialect::msa, "general"},
      {"لكن", LexiconCategory::change_context, Dialect::msa, "general"},
      {"زباله", LexiconCategory::strong_negative, Dialect::egyptian,
       "general"},
  });
  const Matcher matcher = compile_matcher(lexicon, kAllDialects, kGeneral);
  const Matcher keywords = Matcher::compile_keywords({"x"});

  const auto label_of = [&](const std::string& text, PipelineConfig config) {
    const TokenizedText toks = tokenize(text);
    const auto ex = extract(toks, matcher, keywords);
    const auto survivors =
        apply_negation(exclude(ex, config), ex.negation_spans, toks, config);
    return aggregate_label(survivors, ex.change_context_spans, config);
  };

  SUBCASE("polarity after the contrast term wins") {
    const std::string tweet =
        "عملكم رائع جدا وبرنامج متكامل ومفيد، لكن ينقصه شي وهو عدم "
        "توفير خيار بتغير الخط الي خط جهاز الجوال نفسه";
    CHECK(label_of(tweet, PipelineConfig{}) == Label::negative);
    PipelineConfig majority;
    majority.contrast_policy = ContrastPolicy::majority;
    CHECK(label_of(tweet, majority) == Label::positive);  // 3 pos vs 2 neg
  }
  SUBCASE("zero survivors is neutral") {
    CHECK(label_of("كلام عادي", PipelineConfig{}) == Label::neutral);
  }
  SUBCASE("majority rule") {
    CHECK(label_of("رائع متكامل ينقصه", PipelineConfig{}) == Label::positive);
    CHECK(label_of("رائع ينقصه", PipelineConfig{}) == Label::neutral);  // tie
  }
  SUBCASE("strong terms count double") {
    CHECK(label_of("رائع متكامل زباله", PipelineConfig{}) == Label::neutral);
    CHECK(label_of("رائع زباله", PipelineConfig{}) == Label::negative);
  }
}

TEST_CASE("relevance gate uses whole-token keyword matching") {
  const Matcher keywords =
      Matcher::compile_keywords({"اي دي اس ال", "الخدمه"});
  CHECK(is_relevant(tokenize("سرعه اي دي اس ال ضعيفه").tokens, keywords));
  CHECK_FALSE(is_relevant(tokenize("كلام عادي").tokens, keywords));
  // Elongation is collapsed upstream by normalize; the keyword then hits.
  Vocabulary vocab;
  vocab.add_form("الخدمه");
  CHECK(is_relevant(tokenize(normalize("الخدمههههه", vocab)).tokens, keywords));
}

TEST_CASE("classify composes the full pipeline") {
  const Resources& res = teleco_resources();
  const PipelineConfig& config = teleco_pipeline();

  SUBCASE("irrelevant document short-circuits to neutral") {
    const auto result = classify(doc("t1", "الجو جميل اليوم"), res, config);
    CHECK_FALSE(result.relevant);
    CHECK(result.label == Label::neutral);
    CHECK(result.evidence.empty());
    CHECK(result.links.empty());
  }
  SUBCASE("relevant positive with a proximity link") {
    const auto result = classify(doc("t2", "الخدمة جميلة"), res, config);
    CHECK(result.relevant);
    CHECK(result.label == Label::positive);
    REQUIRE(result.evidence.size() == 1);
    REQUIRE(result.links.size() == 1);
    CHECK(result.links[0].rule == LinkRule::proximity);
  }
  SUBCASE("blocker kills the only polarity term") {
    const auto result = classify(doc("t3", "صباح الخير الخدمة"), res, config);
    CHECK(result.relevant);
    CHECK(result.label == Label::neutral);
    CHECK(result.evidence.empty());
  }
  SUBCASE("the contrast tweet classifies negative end to end") {
    const auto result = classify(
        doc("t4",
            "عملكم رائع جدا وبرنامج متكامل ومفيد، لكن ينقصه شي وهو عدم "
            "توفير خيار بتغير الخط الي خط جهاز الجوال نفسه"),
        res, config);
    CHECK(result.relevant);
    CHECK(result.label == Label::negative);
  }
  SUBCASE("arabizi is transliterated before matching") {
    // "gamila" decodes to جميلا؟ .. the decoder output depends on the
    // table; use the canonical e7na example instead with a keyword.
    const auto result = classify(doc("t5", "e7na مبسوطين من الخدمة الجميلة"),
                                 res, config);
    CHECK(result.relevant);
    CHECK(result.label == Label::positive);
  }
  SUBCASE("normalization variants hit the same entries") {
    const auto a = classify(doc("a", "الخدمة جميلة"), res, config);
    const auto b = classify(doc("b", "الخدمه جمييييله"), res, config);
    CHECK(a.label == b.label);
    CHECK(a.relevant == b.relevant);
  }
}

TEST_CASE("classify invariants hold on a randomized corpus") {
  const Resources& res = teleco_resources();
  const PipelineConfig& config = teleco_pipeline();
  const std::vector<std::string> pool = {
      "الخدمة", "النت",   "جميل",  "سيء",  "صباح", "الخير", "مش",
      "لكن",    "هل",     "؟",     "زفت",  "رائع", "كلام",  "اليوم",
      "ايه",    "القرف",  "ده",    "جدا",  "و",    "عادي"};
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const size_t len = 1 + rng() % 12;
    for (size_t i = 0; i < len; ++i) {
      if (i > 0) text += ' ';
      text += pool[rng() % pool.size()];
    }
    const auto result = classify(doc("f", text), res, config);
    CAPTURE(text);
    // Relevance gate.
    if (!result.relevant) {
      CHECK(result.label == Label::neutral);
      CHECK(result.links.empty());
    }
    // Non-neutral labels always have evidence.
    if (result.label != Label::neutral) {
      CHECK(!result.evidence.empty());
    }
    // Blocker dominance and question suppression, recomputed from the
    // pipeline's own extraction.
    const std::string norm = normalize(text, res.vocab, res.norm_opts);
    const TokenizedText toks = tokenize(norm);
    const auto ex = extract(toks, res.matcher, res.keyword_matcher);
    for (const auto& p : result.evidence) {
      for (const auto& blocker : ex.blocker_spans) {
        CHECK_FALSE(p.span.chars_intersect(blocker));
      }
      if (!p.strong()) {
        const size_t sentence = toks.sentence_of(p.span.token_begin);
        for (const auto& q : ex.question_spans) {
          CHECK(toks.sentence_of(q.token_begin) != sentence);
        }
      }
    }
    // Exclusion monotonicity: evidence comes from extracted polarity.
    for (const auto& p : result.evidence) {
      bool found = false;
      for (const auto& span : ex.polarity_spans) {
        if (span.token_begin == p.span.token_begin &&
            span.token_end == p.span.token_end &&
            span.category == p.span.category) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("result lines serialize with the documented schema") {
  const Resources& res = teleco_resources();
  const auto result =
      classify(doc("tw-9", "الخدمة جميلة"), res, teleco_pipeline());
  const std::string line = result_to_jsonl(result);
  const auto obj = nlohmann::json::parse(line);
  CHECK(obj["id"] == "tw-9");
  CHECK(obj["relevant"] == true);
  CHECK(obj["label"] == "positive");
  REQUIRE(obj["evidence"].size() == 1);
  CHECK(obj["evidence"][0]["surface"] == "جميله");
  CHECK(obj["evidence"][0]["category"] == "positive");
  CHECK(obj["evidence"][0]["effective"] == "positive");
  CHECK(obj["evidence"][0]["start"].is_number());
  REQUIRE(obj["links"].size() == 1);
  CHECK(obj["links"][0]["keyword"] == "الخدمه");
  CHECK(obj["links"][0]["rule"] == "proximity");

  const auto parsed = parse_result_line(line, 1);
  REQUIRE(std::holds_alternative<PredictedResult>(parsed));
  CHECK(std::get<PredictedResult>(parsed).label == Label::positive);
}

TEST_SUITE_END();
