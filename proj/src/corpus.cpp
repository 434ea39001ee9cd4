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

#include "arasent/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "arasent/hash.hpp"

namespace arasent {

using nlohmann::json;

std::string_view to_string(Source s) {
  switch (s) {
    case Source::twitter: return "twitter";
    case Source::blog: return "blog";
    case Source::forum: return "forum";
  }
  return "";
}

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::male: return "male";
    case Gender::female: return "female";
    case Gender::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(MaritalStatus m) {
  switch (m) {
    case MaritalStatus::single: return "single";
    case MaritalStatus::married: return "married";
    case MaritalStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(ParentalStatus p) {
  switch (p) {
    case ParentalStatus::parent: return "parent";
    case ParentalStatus::not_stated: return "not_stated";
  }
  return "not_stated";
}

namespace {

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != '\f' &&
        c != '\v') {
      return false;
    }
  }
  return true;
}

std::optional<Source> parse_source(std::string_view s) {
  if (s == "twitter") return Source::twitter;
  if (s == "blog") return Source::blog;
  if (s == "forum") return Source::forum;
  return std::nullopt;
}

std::optional<Gender> parse_gender(std::string_view s) {
  if (s == "male") return Gender::male;
  if (s == "female") return Gender::female;
  if (s == "unknown") return Gender::unknown;
  return std::nullopt;
}

MaritalStatus parse_marital(std::string_view s) {
  if (s == "single") return MaritalStatus::single;
  if (s == "married") return MaritalStatus::married;
  return MaritalStatus::unknown;
}

Diagnostic make_error(size_t line_number, const std::string& message) {
  return Diagnostic{line_number, message};
}

std::variant<DocumentRecord, Diagnostic> parse_record_json(
    const json& obj, size_t line_number) {
  DocumentRecord record;
  record.line_number = line_number;
  if (!obj.is_object()) return make_error(line_number, "line is not an object");
  if (!obj.contains("id") || !obj["id"].is_string()) {
    return make_error(line_number, "missing required string field 'id'");
  }
  record.id = obj["id"].get<std::string>();
  if (record.id.empty()) return make_error(line_number, "empty 'id'");
  if (!obj.contains("text") || !obj["text"].is_string()) {
    return make_error(line_number, "missing required string field 'text'");
  }
  record.text = obj["text"].get<std::string>();
  if (is_blank(record.text)) return make_error(line_number, "blank 'text'");
  if (!obj.contains("source") || !obj["source"].is_string()) {
    return make_error(line_number, "missing required string field 'source'");
  }
  const auto source = parse_source(obj["source"].get<std::string>());
  if (!source) {
    return make_error(line_number,
                      "unknown source '" + obj["source"].get<std::string>() +
                          "'");
  }
  record.source = *source;

  if (obj.contains("created_at")) {
    if (!obj["created_at"].is_string()) {
      return make_error(line_number, "'created_at' must be a string");
    }
    record.created_at = obj["created_at"].get<std::string>();
  }
  if (obj.contains("lang")) {
    if (!obj["lang"].is_string()) {
      return make_error(line_number, "'lang' must be a string");
    }
    record.lang_hint = obj["lang"].get<std::string>();
  }
  if (obj.contains("retweet")) {
    if (!obj["retweet"].is_boolean()) {
      return make_error(line_number, "'retweet' must be a boolean");
    }
    record.retweet_flag = obj["retweet"].get<bool>();
  }
  if (obj.contains("author")) {
    const auto& a = obj["author"];
    if (!a.is_object()) {
      return make_error(line_number, "'author' must be an object");
    }
    AuthorMeta meta;
    if (a.contains("user_id") && a["user_id"].is_string()) {
      meta.user_id = a["user_id"].get<std::string>();
    }
    if (a.contains("gender")) {
      if (!a["gender"].is_string()) {
        return make_error(line_number, "'author.gender' must be a string");
      }
      const auto g = parse_gender(a["gender"].get<std::string>());
      if (!g) {
        return make_error(line_number, "unknown gender '" +
                                           a["gender"].get<std::string>() +
                                           "'");
      }
      meta.gender = *g;
    }
    if (a.contains("country") && a["country"].is_string()) {
      meta.country = a["country"].get<std::string>();
    }
    if (a.contains("city") && a["city"].is_string()) {
      meta.city = a["city"].get<std::string>();
    }
    if (a.contains("marital_status") && a["marital_status"].is_string()) {
      meta.marital_status = parse_marital(a["marital_status"].get<std::string>());
    }
    if (a.contains("description") && a["description"].is_string()) {
      meta.description = a["description"].get<std::string>();
    }
    record.author = std::move(meta);
  }
  return record;
}

}  // namespace

std::variant<DocumentRecord, Diagnostic> parse_record_line(
    std::string_view line, size_t line_number) {
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded()) {
    return make_error(line_number, "malformed JSON");
  }
  return parse_record_json(obj, line_number);
}

std::variant<AnnotatedRecord, Diagnostic> parse_annotated_line(
    std::string_view line, size_t line_number) {
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded()) {
    return make_error(line_number, "malformed JSON");
  }
  auto parsed = parse_record_json(obj, line_number);
  if (std::holds_alternative<Diagnostic>(parsed)) {
    return std::get<Diagnostic>(parsed);
  }
  if (!obj.contains("gold") || !obj["gold"].is_string()) {
    return make_error(line_number, "missing required string field 'gold'");
  }
  const auto gold = parse_label(obj["gold"].get<std::string>());
  if (!gold) {
    return make_error(line_number,
                      "unknown gold label '" + obj["gold"].get<std::string>() +
                          "'");
  }
  return AnnotatedRecord{std::get<DocumentRecord>(std::move(parsed)), *gold};
}

namespace {

template <typename RecordT, typename ParseFn>
void read_jsonl(const std::string& path, bool strict,
                std::vector<RecordT>& records,
                std::vector<Diagnostic>& diagnostics, ParseFn parse) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto parsed = parse(line, lineno);
    if (std::holds_alternative<Diagnostic>(parsed)) {
      const auto& diag = std::get<Diagnostic>(parsed);
      if (strict) {
        throw std::runtime_error(path + ":" + std::to_string(diag.line_number) +
                                 ": " + diag.message);
      }
      diagnostics.push_back(diag);
    } else {
      records.push_back(std::get<RecordT>(std::move(parsed)));
    }
  }
}

}  // namespace

ReadResult read_records(const std::string& path, bool strict) {
  ReadResult result;
  read_jsonl<DocumentRecord>(path, strict, result.records, result.diagnostics,
                             parse_record_line);
  return result;
}

AnnotatedReadResult read_annotated(const std::string& path, bool strict) {
  AnnotatedReadResult result;
  read_jsonl<AnnotatedRecord>(path, strict, result.records, result.diagnostics,
                              parse_annotated_line);
  return result;
}

Deduper::Deduper(const Vocabulary* vocab, NormalizationOptions opts)
    : vocab_(vocab), opts_(opts) {}

bool Deduper::is_retweet(const DocumentRecord& record) {
  if (record.retweet_flag.value_or(false)) return true;
  const std::string& t = record.text;
  return t.size() >= 4 && (t[0] == 'R' || t[0] == 'r') &&
         (t[1] == 'T' || t[1] == 't') && t[2] == ' ' && t[3] == '@';
}

uint64_t Deduper::fingerprint(const DocumentRecord& record) const {
  const Vocabulary& vocab = vocab_ ? *vocab_ : empty_vocab_;
  return fnv1a64(normalize(record.text, vocab, opts_));
}

bool Deduper::should_keep_fingerprint(uint64_t fp, bool retweet) {
  if (retweet) {
    ++retweets_dropped_;
    return false;
  }
  if (!seen_.insert(fp).second) {
    ++duplicates_dropped_;
    return false;
  }
  return true;
}

bool Deduper::should_keep(const DocumentRecord& record) {
  const bool rt = is_retweet(record);
  return should_keep_fingerprint(rt ? 0 : fingerprint(record), rt);
}

std::vector<DocumentRecord> dedup(std::vector<DocumentRecord> records,
                                  const Vocabulary* vocab) {
  Deduper deduper(vocab);
  std::vector<DocumentRecord> out;
  out.reserve(records.size());
  for (auto& record : records) {
    if (deduper.should_keep(record)) out.push_back(std::move(record));
  }
  return out;
}

namespace {

// Unbiased bounded draw: rejects the low slice of the 64-bit range so
// every residue is equally likely.
uint64_t bounded_uniform(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

SampleSplit sample_balanced(const std::vector<AnnotatedRecord>& annotated,
                            size_t n_per_class, uint64_t seed) {
  std::vector<std::vector<size_t>> per_class(kAllLabels.size());
  for (size_t i = 0; i < annotated.size(); ++i) {
    per_class[static_cast<size_t>(annotated[i].gold_label)].push_back(i);
  }
  for (Label label : kAllLabels) {
    const auto& members = per_class[static_cast<size_t>(label)];
    if (members.size() < n_per_class) {
      throw std::runtime_error(std::string(to_string(label)) + ": " +
                               std::to_string(members.size()) + " < " +
                               std::to_string(n_per_class));
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<bool> selected(annotated.size(), false);
  for (Label label : kAllLabels) {
    auto& members = per_class[static_cast<size_t>(label)];
    // Partial Fisher-Yates: the first n_per_class slots end up holding
    // a uniform without-replacement draw.
    for (size_t i = 0; i < n_per_class; ++i) {
      const size_t j = i + static_cast<size_t>(bounded_uniform(
                               rng, static_cast<uint64_t>(members.size() - i)));
      std::swap(members[i], members[j]);
      selected[members[i]] = true;
    }
  }

  SampleSplit split;
  for (size_t i = 0; i < annotated.size(); ++i) {
    (selected[i] ? split.test : split.dev).push_back(annotated[i]);
  }
  return split;
}

}  // namespace arasent
