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
// Author segment extraction from record metadata plus a small
// text-pattern rule list, and sentiment aggregation by segment.

#ifndef ARASENT_PROFILES_HPP_
#define ARASENT_PROFILES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arasent/classifier.hpp"
#include "arasent/corpus.hpp"
#include "arasent/matcher.hpp"

namespace arasent {

struct AuthorProfile {
  std::string user_id;
  Gender gender = Gender::unknown;
  std::string country = "unknown";  // ISO-3166 alpha-2 when recognized
  std::optional<std::string> city;
  MaritalStatus marital_status = MaritalStatus::unknown;
  ParentalStatus parental_status = ParentalStatus::not_stated;
};

// Uppercase ISO-3166 alpha-2 for recognized country names (English and
// Arabic forms of the Arabic-speaking countries, plus bare alpha-2
// codes); anything else passes through verbatim.
std::string canonical_country(const std::string& raw);

// Loadable phrase-pattern rules: when a pattern matches the tweet text
// or the author description, the rule's field assignments fill profile
// fields the metadata left unknown. Metadata always wins; among rules,
// file order wins per field.
class ProfileRules {
 public:
  struct Assignment {
    std::string field;  // gender | marital_status | parental_status | country | city
    std::string value;
  };

  // TSV: pattern<TAB>field=value[,field=value...]; # comments allowed.
  static ProfileRules load(const std::string& path);
  // In-memory construction for tests and defaults.
  void add_rule(const std::string& pattern,
                std::vector<Assignment> assignments);
  void compile();

  // The two worked examples this scheme generalizes: a motherhood
  // phrase implying female+parent, and a new-child phrase implying
  // parent.
  static ProfileRules bundled_defaults();

  void apply(const std::string& raw_text, AuthorProfile& profile) const;
  size_t rule_count() const { return assignments_.size(); }

 private:
  std::vector<std::string> patterns_;
  std::vector<std::vector<Assignment>> assignments_;
  TokenPatternSet matcher_;
  bool compiled_ = false;
};

// Metadata fields copied when present; pattern rules fire on the tweet
// text and author description for the rest; everything else stays
// unknown.
AuthorProfile extract_profile(const DocumentRecord& record,
                              const ProfileRules& rules);

enum class AggregateDimension {
  gender,
  country,
  gender_x_polarity,
  country_x_polarity,
};

std::string_view to_string(AggregateDimension d);
std::optional<AggregateDimension> parse_dimension(std::string_view s);

struct AggregateRow {
  std::string bucket;
  size_t positive = 0;
  size_t negative = 0;
};

struct AggregateReport {
  AggregateDimension dimension = AggregateDimension::gender;
  std::vector<AggregateRow> rows;  // sorted by bucket key

  size_t total_positive() const;
  size_t total_negative() const;
  // CSV with header bucket,positive,negative and a trailing totals row.
  std::string to_csv() const;
};

// Associative count merge: shard aggregation then merge() equals
// aggregating the concatenation. Only relevant results with a positive
// or negative label are counted.
class Aggregator {
 public:
  explicit Aggregator(AggregateDimension dimension);

  void add(const SentimentResult& result, const AuthorProfile* profile);
  void add(const PredictedResult& result, const AuthorProfile* profile);
  void merge(const Aggregator& other);
  AggregateReport report() const;

 private:
  void count(bool relevant, Label label, const AuthorProfile* profile);

  AggregateDimension dimension_;
  std::map<std::string, std::pair<size_t, size_t>> counts_;
};

AggregateReport aggregate(const std::vector<SentimentResult>& results,
                          const std::map<std::string, AuthorProfile>& profiles,
                          AggregateDimension dimension);

}  // namespace arasent

#endif  // ARASENT_PROFILES_HPP_
