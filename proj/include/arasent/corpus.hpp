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
// Document stream ingestion: JSONL parsing, duplicate and retweet
// removal, and balanced sampling of annotated corpora.

#ifndef ARASENT_CORPUS_HPP_
#define ARASENT_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "arasent/label.hpp"
#include "arasent/normalizer.hpp"

namespace arasent {

enum class Source { twitter, blog, forum };
enum class Gender { male, female, unknown };
enum class MaritalStatus { single, married, unknown };
enum class ParentalStatus { parent, not_stated };

std::string_view to_string(Source s);
std::string_view to_string(Gender g);
std::string_view to_string(MaritalStatus m);
std::string_view to_string(ParentalStatus p);

// Author metadata as present on the record; unknown means the field was
// absent or explicitly unknown.
struct AuthorMeta {
  std::string user_id;
  Gender gender = Gender::unknown;
  std::optional<std::string> country;
  std::optional<std::string> city;
  MaritalStatus marital_status = MaritalStatus::unknown;
  std::optional<std::string> description;
};

struct DocumentRecord {
  std::string id;
  std::string text;
  Source source = Source::twitter;
  std::optional<std::string> created_at;  // RFC3339, kept verbatim
  std::optional<std::string> lang_hint;
  std::optional<AuthorMeta> author;
  std::optional<bool> retweet_flag;
  size_t line_number = 0;  // 1-based position in the source file
};

struct AnnotatedRecord {
  DocumentRecord record;
  Label gold_label = Label::neutral;
};

struct Diagnostic {
  size_t line_number = 0;
  std::string message;
};

// One JSONL line -> record or per-line diagnostic.
std::variant<DocumentRecord, Diagnostic> parse_record_line(
    std::string_view line, size_t line_number);
std::variant<AnnotatedRecord, Diagnostic> parse_annotated_line(
    std::string_view line, size_t line_number);

struct ReadResult {
  std::vector<DocumentRecord> records;
  std::vector<Diagnostic> diagnostics;
};

struct AnnotatedReadResult {
  std::vector<AnnotatedRecord> records;
  std::vector<Diagnostic> diagnostics;
};

// Reads a whole JSONL file. In strict mode the first malformed line
// throws; in lenient mode it becomes a diagnostic and the stream
// continues.
ReadResult read_records(const std::string& path, bool strict = false);
AnnotatedReadResult read_annotated(const std::string& path,
                                   bool strict = false);

// Sequential dedup stage. A record is dropped when it is a retweet
// (retweet_flag, or raw text starting with "RT @" case-insensitively)
// or when the FNV-1a 64 fingerprint of its fully normalized text was
// seen before. Survivor order follows input order.
class Deduper {
 public:
  explicit Deduper(const Vocabulary* vocab = nullptr,
                   NormalizationOptions opts = {});

  bool should_keep(const DocumentRecord& record);
  uint64_t fingerprint(const DocumentRecord& record) const;
  // Dedup by precomputed fingerprint (parallel pipelines compute the
  // hash on workers and apply this in stream order).
  bool should_keep_fingerprint(uint64_t fp, bool is_retweet);

  static bool is_retweet(const DocumentRecord& record);

  size_t retweets_dropped() const { return retweets_dropped_; }
  size_t duplicates_dropped() const { return duplicates_dropped_; }

 private:
  const Vocabulary* vocab_;
  NormalizationOptions opts_;
  Vocabulary empty_vocab_;
  std::unordered_set<uint64_t> seen_;
  size_t retweets_dropped_ = 0;
  size_t duplicates_dropped_ = 0;
};

std::vector<DocumentRecord> dedup(std::vector<DocumentRecord> records,
                                  const Vocabulary* vocab = nullptr);

struct SampleSplit {
  std::vector<AnnotatedRecord> test;  // n_per_class per label
  std::vector<AnnotatedRecord> dev;   // everything else
};

// Uniform without-replacement sampling, exactly n_per_class records per
// label. Deterministic: std::mt19937_64 seeded with `seed`, classes
// processed in label order (positive, negative, neutral), each drawn by
// a partial Fisher-Yates shuffle whose bounded draws use unbiased
// modulo rejection on raw 64-bit generator output. Both splits preserve
// input order. Throws when a class is short, e.g. "neutral: 399 < 400".
SampleSplit sample_balanced(const std::vector<AnnotatedRecord>& annotated,
                            size_t n_per_class, uint64_t seed);

}  // namespace arasent

#endif  // ARASENT_CORPUS_HPP_
