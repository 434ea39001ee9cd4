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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace arasent {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(LinkRule r) {
  switch (r) {
    case LinkRule::proximity: return "proximity";
    case LinkRule::preference: return "preference";
    case LinkRule::conjunction: return "conjunction";
  }
  return "";
}

namespace {

// Conjunction tokens joining two keywords for linkage rule 3.
const char* const kConjunctionTokens[] = {"\xD9\x88", "and"};  // و

bool is_conjunction_token(const std::string& text) {
  for (const char* c : kConjunctionTokens) {
    if (text == c) return true;
  }
  return false;
}

size_t sentence_of_span(const TokenizedText& doc, const Span& span) {
  return doc.sentence_of(span.token_begin);
}

}  // namespace

ExtractionResult extract(const TokenizedText& doc, const Matcher& matcher,
                         const Matcher& keyword_matcher) {
  ExtractionResult out;
  out.sentence_bounds = doc.sentences;

  for (const Span& span : matcher.find_matches(doc.tokens)) {
    switch (span.category) {
      case SpanCategory::positive:
      case SpanCategory::negative:
      case SpanCategory::strong_positive:
      case SpanCategory::strong_negative:
        out.polarity_spans.push_back(span);
        break;
      case SpanCategory::blocker:
        out.blocker_spans.push_back(span);
        break;
      case SpanCategory::question_word:
        out.question_spans.push_back(span);
        break;
      case SpanCategory::change_context:
        out.change_context_spans.push_back(span);
        break;
      case SpanCategory::negation:
        out.negation_spans.push_back(span);
        break;
      case SpanCategory::preference_positive:
      case SpanCategory::preference_negative:
        out.preference_spans.push_back(span);
        break;
      default:
        break;
    }
  }

  for (size_t t = 0; t < doc.tokens.size(); ++t) {
    if (is_question_mark_token(doc.tokens[t])) {
      Span span;
      span.start = doc.tokens[t].start;
      span.end = doc.tokens[t].end;
      span.token_begin = t;
      span.token_end = t + 1;
      span.category = SpanCategory::question_mark;
      span.surface = doc.tokens[t].text;
      out.question_spans.push_back(span);
    }
  }
  std::sort(out.question_spans.begin(), out.question_spans.end(),
            [](const Span& a, const Span& b) {
              return a.token_begin < b.token_begin;
            });

  out.keyword_spans = keyword_matcher.find_matches(doc.tokens);
  return out;
}

std::vector<Span> exclude(const ExtractionResult& extraction,
                          const PipelineConfig& config) {
  std::vector<bool> question_sentence;
  bool any_question = !extraction.question_spans.empty();
  question_sentence.assign(extraction.sentence_bounds.size(), false);
  for (const Span& q : extraction.question_spans) {
    for (size_t s = 0; s < extraction.sentence_bounds.size(); ++s) {
      const auto& range = extraction.sentence_bounds[s];
      if (q.token_begin >= range.begin && q.token_begin < range.end) {
        question_sentence[s] = true;
      }
    }
  }

  std::vector<Span> survivors;
  for (const Span& span : extraction.polarity_spans) {
    bool blocked = false;
    for (const Span& blocker : extraction.blocker_spans) {
      if (span.chars_intersect(blocker)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;

    if (!is_strong_span(span.category)) {
      bool in_question_scope = false;
      if (config.question_scope == QuestionScope::document) {
        in_question_scope = any_question;
      } else {
        for (size_t s = 0; s < extraction.sentence_bounds.size(); ++s) {
          const auto& range = extraction.sentence_bounds[s];
          if (span.token_begin >= range.begin && span.token_begin < range.end) {
            in_question_scope = question_sentence[s];
            break;
          }
        }
      }
      if (in_question_scope) continue;
    }
    survivors.push_back(span);
  }
  return survivors;
}

std::vector<PolaritySpan> apply_negation(const std::vector<Span>& survivors,
                                         const std::vector<Span>& negation_spans,
                                         const TokenizedText& doc,
                                         const PipelineConfig& config) {
  std::vector<PolaritySpan> out;
  out.reserve(survivors.size());
  for (const Span& span : survivors) {
    size_t flips = 0;
    const size_t sentence = sentence_of_span(doc, span);
    for (const Span& neg : negation_spans) {
      if (neg.token_end > span.token_begin) continue;
      if (span.token_begin - neg.token_end >= config.negation_window) continue;
      if (sentence_of_span(doc, neg) != sentence) continue;
      ++flips;
    }
    out.push_back({span, flips % 2 == 1});
  }
  return out;
}

namespace {

// Token gap between two non-overlapping spans; zero when they touch or
// intersect.
size_t token_gap(const Span& a, const Span& b) {
  if (a.token_end <= b.token_begin) return b.token_begin - a.token_end;
  if (b.token_end <= a.token_begin) return a.token_begin - b.token_end;
  return 0;
}

bool strictly_between(const Span& x, const Span& a, const Span& b) {
  const Span& left = a.token_end <= b.token_begin ? a : b;
  const Span& right = a.token_end <= b.token_begin ? b : a;
  return x.token_begin >= left.token_end && x.token_end <= right.token_begin;
}

struct LinkKey {
  size_t kw_begin, kw_end;
  Label polarity;
  bool operator<(const LinkKey& o) const {
    if (kw_begin != o.kw_begin) return kw_begin < o.kw_begin;
    if (kw_end != o.kw_end) return kw_end < o.kw_end;
    return polarity < o.polarity;
  }
};

}  // namespace

std::vector<TargetLink> link(const ExtractionResult& extraction,
                             const std::vector<PolaritySpan>& survivors,
                             const TokenizedText& doc,
                             const PipelineConfig& config) {
  std::vector<TargetLink> links;
  std::set<LinkKey> made;

  const auto add_link = [&](const Span& keyword, std::optional<Span> evidence,
                            Label polarity, LinkRule rule) {
    if (!made.insert({keyword.token_begin, keyword.token_end, polarity})
             .second) {
      return;
    }
    links.push_back({keyword, std::move(evidence), polarity, rule});
  };

  // Rule 1: proximity, with no conflicting polarity strictly between.
  for (const Span& keyword : extraction.keyword_spans) {
    const size_t kw_sentence = doc.sentence_of(keyword.token_begin);
    for (const PolaritySpan& p : survivors) {
      if (doc.sentence_of(p.span.token_begin) != kw_sentence) continue;
      if (token_gap(keyword, p.span) > config.linkage_window) continue;
      bool conflict = false;
      for (const PolaritySpan& other : survivors) {
        if (other.effective() == p.effective()) continue;
        if (strictly_between(other.span, keyword, p.span)) {
          conflict = true;
          break;
        }
      }
      if (conflict) continue;
      add_link(keyword, p.span, p.effective(), LinkRule::proximity);
    }
  }

  // Rule 2: preference terms polarize the keyword before and after in
  // opposite directions.
  for (const Span& pref : extraction.preference_spans) {
    const size_t sentence = doc.sentence_of(pref.token_begin);
    const Span* before = nullptr;
    const Span* after = nullptr;
    for (const Span& keyword : extraction.keyword_spans) {
      if (doc.sentence_of(keyword.token_begin) != sentence) continue;
      if (keyword.token_end <= pref.token_begin) {
        if (before == nullptr || keyword.token_end > before->token_end) {
          before = &keyword;
        }
      } else if (keyword.token_begin >= pref.token_end) {
        if (after == nullptr || keyword.token_begin < after->token_begin) {
          after = &keyword;
        }
      }
    }
    if (before == nullptr || after == nullptr) continue;
    const bool before_positive =
        pref.category == SpanCategory::preference_positive;
    add_link(*before, pref,
             before_positive ? Label::positive : Label::negative,
             LinkRule::preference);
    add_link(*after, pref,
             before_positive ? Label::negative : Label::positive,
             LinkRule::preference);
  }

  // Rule 3: keywords joined by a conjunction share their polarity.
  // Applied to fixpoint so chains propagate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Span& k1 : extraction.keyword_spans) {
      for (const Span& k2 : extraction.keyword_spans) {
        if (k1.token_end + 1 != k2.token_begin) continue;
        if (!is_conjunction_token(doc.tokens[k1.token_end].text)) continue;
        // Copy polarities across the pair, in both directions.
        const size_t before = links.size();
        for (size_t i = 0; i < links.size(); ++i) {
          const TargetLink l = links[i];
          if (l.keyword_span.token_begin == k1.token_begin &&
              l.keyword_span.token_end == k1.token_end) {
            add_link(k2, l.polarity_span, l.polarity, LinkRule::conjunction);
          }
          if (l.keyword_span.token_begin == k2.token_begin &&
              l.keyword_span.token_end == k2.token_end) {
            add_link(k1, l.polarity_span, l.polarity, LinkRule::conjunction);
          }
        }
        if (links.size() != before) changed = true;
      }
    }
  }

  std::sort(links.begin(), links.end(),
            [](const TargetLink& a, const TargetLink& b) {
              if (a.keyword_span.token_begin != b.keyword_span.token_begin) {
                return a.keyword_span.token_begin < b.keyword_span.token_begin;
              }
              return a.polarity < b.polarity;
            });
  return links;
}

Label aggregate_label(const std::vector<PolaritySpan>& survivors,
                      const std::vector<Span>& change_context_spans,
                      const PipelineConfig& config) {
  size_t from_token = 0;
  if (config.contrast_policy == ContrastPolicy::after_wins &&
      !change_context_spans.empty()) {
    for (const Span& cc : change_context_spans) {
      from_token = std::max(from_token, cc.token_end);
    }
  }
  size_t positives = 0;
  size_t negatives = 0;
  for (const PolaritySpan& p : survivors) {
    if (p.span.token_begin < from_token) continue;
    const size_t weight = p.strong() ? 2 : 1;
    if (p.effective() == Label::positive) {
      positives += weight;
    } else {
      negatives += weight;
    }
  }
  if (positives > negatives) return Label::positive;
  if (negatives > positives) return Label::negative;
  return Label::neutral;
}

bool is_relevant(const std::vector<Token>& tokens,
                 const Matcher& keyword_matcher) {
  return !keyword_matcher.find_matches(tokens).empty();
}

SentimentResult classify(const DocumentRecord& doc, const Resources& resources,
                         const PipelineConfig& config) {
  SentimentResult result;
  result.doc_id = doc.id;

  std::string text = normalize(doc.text, resources.vocab, resources.norm_opts);
  if (resources.phrase_table.has_value()) {
    text = transliterate_text(text, *resources.phrase_table,
                              resources.exclusion, resources.decoder);
  }
  const TokenizedText tokenized = tokenize(text);

  if (!is_relevant(tokenized.tokens, resources.keyword_matcher)) {
    result.relevant = false;
    result.label = Label::neutral;
    return result;
  }
  result.relevant = true;

  const ExtractionResult extraction =
      extract(tokenized, resources.matcher, resources.keyword_matcher);
  const std::vector<Span> survivors = exclude(extraction, config);
  result.evidence = apply_negation(survivors, extraction.negation_spans,
                                   tokenized, config);
  result.links = link(extraction, result.evidence, tokenized, config);
  result.label = aggregate_label(result.evidence,
                                 extraction.change_context_spans, config);
  return result;
}

// --- Config and resources ------------------------------------------

namespace {

std::string resolve_path(const std::filesystem::path& base,
                         const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute()) return path.string();
  return (base / path).lexically_normal().string();
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json obj;
  try {
    in >> obj;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": invalid JSON: " + e.what());
  }
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  RunConfig config;
  auto& pipe = config.pipeline;
  if (obj.contains("use_case")) pipe.use_case = obj["use_case"].get<std::string>();
  if (obj.contains("linkage_window")) {
    pipe.linkage_window = obj["linkage_window"].get<size_t>();
  }
  if (obj.contains("negation_window")) {
    pipe.negation_window = obj["negation_window"].get<size_t>();
  }
  if (pipe.linkage_window < 1 || pipe.negation_window < 1) {
    throw std::runtime_error(path + ": rule windows must be >= 1");
  }
  if (obj.contains("question_scope")) {
    const std::string s = obj["question_scope"].get<std::string>();
    if (s == "sentence") {
      pipe.question_scope = QuestionScope::sentence;
    } else if (s == "document") {
      pipe.question_scope = QuestionScope::document;
    } else {
      throw std::runtime_error(path + ": unknown question_scope '" + s + "'");
    }
  }
  if (obj.contains("contrast_policy")) {
    const std::string s = obj["contrast_policy"].get<std::string>();
    if (s == "after_wins") {
      pipe.contrast_policy = ContrastPolicy::after_wins;
    } else if (s == "majority") {
      pipe.contrast_policy = ContrastPolicy::majority;
    } else {
      throw std::runtime_error(path + ": unknown contrast_policy '" + s + "'");
    }
  }
  if (obj.contains("dialects")) {
    pipe.dialects.clear();
    for (const auto& d : obj["dialects"]) {
      const auto parsed = parse_dialect(d.get<std::string>());
      if (!parsed) {
        throw std::runtime_error(path + ": unknown dialect '" +
                                 d.get<std::string>() + "'");
      }
      pipe.dialects.insert(*parsed);
    }
  }
  if (obj.contains("domains")) {
    pipe.domains.clear();
    for (const auto& d : obj["domains"]) {
      pipe.domains.insert(d.get<std::string>());
    }
  }
  if (obj.contains("lexicons")) {
    for (const auto& p : obj["lexicons"]) {
      config.lexicon_paths.push_back(resolve_path(base, p.get<std::string>()));
    }
  }
  if (config.lexicon_paths.empty()) {
    throw std::runtime_error(path + ": 'lexicons' must list at least one file");
  }
  if (obj.contains("keywords")) {
    for (const auto& k : obj["keywords"]) {
      pipe.keywords.push_back(k.get<std::string>());
    }
  }
  if (obj.contains("keywords_path")) {
    const std::string kp = resolve_path(base, obj["keywords_path"].get<std::string>());
    std::ifstream kin(kp);
    if (!kin) throw std::runtime_error("cannot open keywords file: " + kp);
    std::string line;
    while (std::getline(kin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      pipe.keywords.push_back(line);
    }
  }
  if (pipe.keywords.empty()) {
    throw std::runtime_error(path + ": no keywords configured");
  }
  if (obj.contains("wordlist")) {
    config.wordlist_path = resolve_path(base, obj["wordlist"].get<std::string>());
  }
  if (obj.contains("phrase_table")) {
    config.phrase_table_path =
        resolve_path(base, obj["phrase_table"].get<std::string>());
  }
  if (obj.contains("exclusions")) {
    config.exclusion_path =
        resolve_path(base, obj["exclusions"].get<std::string>());
  }
  return config;
}

Resources load_resources(const RunConfig& config) {
  Resources res;
  res.lexicon = load_lexicon(config.lexicon_paths);
  add_lexicon_to_vocabulary(res.lexicon, res.vocab);
  if (config.wordlist_path) {
    res.vocab.add_wordlist_file(*config.wordlist_path);
  }
  res.matcher = compile_matcher(res.lexicon, config.pipeline.dialects,
                                config.pipeline.domains);
  // Keywords are normalized against the full vocabulary so lexicon and
  // keyword matching see the same canonical text.
  std::vector<std::string> keywords;
  keywords.reserve(config.pipeline.keywords.size());
  for (const auto& k : config.pipeline.keywords) {
    keywords.push_back(normalize(k, res.vocab));
  }
  res.keyword_matcher = Matcher::compile_keywords(keywords);
  if (config.phrase_table_path) {
    res.phrase_table = load_phrase_table(*config.phrase_table_path);
  }
  if (config.exclusion_path) {
    res.exclusion.add_file(*config.exclusion_path);
  }
  return res;
}

// --- Result wire format --------------------------------------------

std::string result_to_jsonl(const SentimentResult& result) {
  ordered_json obj;
  obj["id"] = result.doc_id;
  obj["relevant"] = result.relevant;
  obj["label"] = std::string(to_string(result.label));
  ordered_json evidence = ordered_json::array();
  for (const PolaritySpan& p : result.evidence) {
    ordered_json e;
    e["start"] = p.span.start;
    e["end"] = p.span.end;
    e["surface"] = p.span.surface;
    e["category"] = std::string(to_string(p.span.category));
    e["effective"] = std::string(to_string(p.effective()));
    evidence.push_back(std::move(e));
  }
  obj["evidence"] = std::move(evidence);
  ordered_json links = ordered_json::array();
  for (const TargetLink& l : result.links) {
    ordered_json e;
    e["keyword"] = l.keyword_span.surface;
    e["polarity"] = std::string(to_string(l.polarity));
    e["rule"] = std::string(to_string(l.rule));
    links.push_back(std::move(e));
  }
  obj["links"] = std::move(links);
  return obj.dump();
}

std::variant<PredictedResult, Diagnostic> parse_result_line(
    std::string_view line, size_t line_number) {
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    return Diagnostic{line_number, "malformed JSON"};
  }
  PredictedResult result;
  if (!obj.contains("id") || !obj["id"].is_string()) {
    return Diagnostic{line_number, "missing required string field 'id'"};
  }
  result.id = obj["id"].get<std::string>();
  if (obj.contains("relevant") && obj["relevant"].is_boolean()) {
    result.relevant = obj["relevant"].get<bool>();
  }
  if (!obj.contains("label") || !obj["label"].is_string()) {
    return Diagnostic{line_number, "missing required string field 'label'"};
  }
  const auto label = parse_label(obj["label"].get<std::string>());
  if (!label) {
    return Diagnostic{line_number,
                      "unknown label '" + obj["label"].get<std::string>() + "'"};
  }
  result.label = *label;
  return result;
}

}  // namespace arasent
