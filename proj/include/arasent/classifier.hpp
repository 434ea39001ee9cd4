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
// The three-phase sentiment rule engine: extraction, exclusion and
// linkage, plus negation handling, contrast segmentation, relevance
// filtering and document-level label aggregation.

#ifndef ARASENT_CLASSIFIER_HPP_
#define ARASENT_CLASSIFIER_HPP_

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "arasent/corpus.hpp"
#include "arasent/label.hpp"
#include "arasent/matcher.hpp"
#include "arasent/normalizer.hpp"
#include "arasent/tokenizer.hpp"
#include "arasent/translit.hpp"

namespace arasent {

enum class QuestionScope { sentence, document };
enum class ContrastPolicy { after_wins, majority };

struct PipelineConfig {
  std::string use_case = "default";
  size_t linkage_window = 5;   // max tokens between keyword and polarity
  size_t negation_window = 2;  // max tokens between negation and polarity
  QuestionScope question_scope = QuestionScope::sentence;
  ContrastPolicy contrast_policy = ContrastPolicy::after_wins;
  std::set<Dialect> dialects = {Dialect::msa, Dialect::egyptian,
                                Dialect::saudi};
  std::set<std::string> domains = {"general"};
  std::vector<std::string> keywords;  // normalized phrases
};

struct ExtractionResult {
  std::vector<Span> polarity_spans;  // positive/negative/strong matches
  std::vector<Span> blocker_spans;
  std::vector<Span> question_spans;  // question marks + question words
  std::vector<Span> change_context_spans;
  std::vector<Span> negation_spans;
  std::vector<Span> preference_spans;
  std::vector<Span> keyword_spans;
  std::vector<SentenceRange> sentence_bounds;
};

// A surviving polarity span with its post-negation polarity.
struct PolaritySpan {
  Span span;
  bool flipped = false;

  Label base() const {
    return (span.category == SpanCategory::positive ||
            span.category == SpanCategory::strong_positive)
               ? Label::positive
               : Label::negative;
  }
  Label effective() const {
    const Label b = base();
    if (!flipped) return b;
    return b == Label::positive ? Label::negative : Label::positive;
  }
  bool strong() const { return is_strong_span(span.category); }
};

enum class LinkRule { proximity, preference, conjunction };
std::string_view to_string(LinkRule r);

struct TargetLink {
  Span keyword_span;
  std::optional<Span> polarity_span;  // evidence; the preference span for rule 2
  Label polarity = Label::neutral;    // positive or negative
  LinkRule rule = LinkRule::proximity;
};

struct SentimentResult {
  std::string doc_id;
  bool relevant = false;
  Label label = Label::neutral;
  std::vector<PolaritySpan> evidence;  // surviving polarity spans
  std::vector<TargetLink> links;
};

// Immutable after load; shared read-only across workers.
struct Resources {
  Lexicon lexicon;
  Matcher matcher;
  Matcher keyword_matcher;
  Vocabulary vocab;
  std::optional<PhraseTable> phrase_table;
  ExclusionList exclusion;
  DecoderParams decoder;
  NormalizationOptions norm_opts;
};

// Config file (JSON) plus the resource paths it names, resolved
// relative to the config file's directory.
struct RunConfig {
  PipelineConfig pipeline;
  std::vector<std::string> lexicon_paths;
  std::optional<std::string> wordlist_path;
  std::optional<std::string> phrase_table_path;
  std::optional<std::string> exclusion_path;
};

RunConfig load_run_config(const std::string& path);
Resources load_resources(const RunConfig& config);

// --- Rule phases ---------------------------------------------------

ExtractionResult extract(const TokenizedText& doc, const Matcher& matcher,
                         const Matcher& keyword_matcher);

// Exclusion phase: blocker overlap kills a polarity span; question
// context kills non-strong polarity spans in scope.
std::vector<Span> exclude(const ExtractionResult& extraction,
                          const PipelineConfig& config);

// Flips polarity for spans preceded by a negation ending within
// negation_window tokens in the same sentence; stacked negations
// compose (two flips cancel).
std::vector<PolaritySpan> apply_negation(const std::vector<Span>& survivors,
                                         const std::vector<Span>& negation_spans,
                                         const TokenizedText& doc,
                                         const PipelineConfig& config);

std::vector<TargetLink> link(const ExtractionResult& extraction,
                             const std::vector<PolaritySpan>& survivors,
                             const TokenizedText& doc,
                             const PipelineConfig& config);

// Majority vote over effective polarities (strong terms count double);
// with after_wins and a contrast marker present, only spans after the
// last marker count. Tie or no survivors reads neutral.
Label aggregate_label(const std::vector<PolaritySpan>& survivors,
                      const std::vector<Span>& change_context_spans,
                      const PipelineConfig& config);

bool is_relevant(const std::vector<Token>& tokens,
                 const Matcher& keyword_matcher);

// Full pipeline: normalize, transliterate, tokenize, relevance gate,
// extract, exclude, negate, link, aggregate.
SentimentResult classify(const DocumentRecord& doc, const Resources& resources,
                         const PipelineConfig& config);

// --- Result wire format --------------------------------------------

std::string result_to_jsonl(const SentimentResult& result);

struct PredictedResult {
  std::string id;
  bool relevant = false;
  Label label = Label::neutral;
};

std::variant<PredictedResult, Diagnostic> parse_result_line(
    std::string_view line, size_t line_number);

}  // namespace arasent

#endif  // ARASENT_CLASSIFIER_HPP_
