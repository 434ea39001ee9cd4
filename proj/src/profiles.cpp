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

#include "arasent/profiles.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "arasent/tokenizer.hpp"
#include "arasent/utf8.hpp"

namespace arasent {

namespace {

std::string lower_ascii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

// Country names are matched after character normalization and ASCII
// lowercasing, so ه/ة spelling variants of the Arabic names coincide.
std::string country_key(const std::string& raw) {
  return normalize_chars(lower_ascii(raw));
}

const std::map<std::string, std::string>& country_table() {
  static const std::map<std::string, std::string>* table = [] {
    auto* t = new std::map<std::string, std::string>();
    const auto put = [t](const char* name, const char* code) {
      (*t)[country_key(name)] = code;
    };
    put("egypt", "EG");
    put("مصر", "EG");
    put("saudi arabia", "SA");
    put("ksa", "SA");
    put("السعودية", "SA");
    put("المملكة العربية السعودية", "SA");
    put("united arab emirates", "AE");
    put("uae", "AE");
    put("الامارات", "AE");
    put("الإمارات", "AE");
    put("kuwait", "KW");
    put("الكويت", "KW");
    put("qatar", "QA");
    put("قطر", "QA");
    put("bahrain", "BH");
    put("البحرين", "BH");
    put("oman", "OM");
    put("عمان", "OM");
    put("jordan", "JO");
    put("الاردن", "JO");
    put("الأردن", "JO");
    put("lebanon", "LB");
    put("لبنان", "LB");
    put("iraq", "IQ");
    put("العراق", "IQ");
    put("syria", "SY");
    put("سوريا", "SY");
    put("palestine", "PS");
    put("فلسطين", "PS");
    put("yemen", "YE");
    put("اليمن", "YE");
    put("morocco", "MA");
    put("المغرب", "MA");
    put("algeria", "DZ");
    put("الجزائر", "DZ");
    put("tunisia", "TN");
    put("تونس", "TN");
    put("libya", "LY");
    put("ليبيا", "LY");
    put("sudan", "SD");
    put("السودان", "SD");
    return t;
  }();
  return *table;
}

bool is_alpha2(const std::string& s) {
  return s.size() == 2 && is_ascii_letter(s[0]) && is_ascii_letter(s[1]);
}

}  // namespace

std::string canonical_country(const std::string& raw) {
  if (raw.empty()) return "unknown";
  if (is_alpha2(raw)) {
    std::string up = raw;
    for (char& c : up) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return up;
  }
  const auto& table = country_table();
  auto it = table.find(country_key(raw));
  return it == table.end() ? raw : it->second;
}

ProfileRules ProfileRules::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile rules: " + path);
  ProfileRules rules;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto where = [&] { return path + ":" + std::to_string(lineno); };
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(where() + ": expected pattern<TAB>assignments");
    }
    const std::string pattern = line.substr(0, tab);
    std::vector<Assignment> assignments;
    std::stringstream parts(line.substr(tab + 1));
    std::string part;
    while (std::getline(parts, part, ',')) {
      const size_t eq = part.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error(where() + ": assignment must be field=value");
      }
      Assignment a{part.substr(0, eq), part.substr(eq + 1)};
      const bool valid =
          (a.field == "gender" && (a.value == "male" || a.value == "female")) ||
          (a.field == "marital_status" &&
           (a.value == "single" || a.value == "married")) ||
          (a.field == "parental_status" && a.value == "parent") ||
          a.field == "country" || a.field == "city";
      if (!valid) {
        throw std::runtime_error(where() + ": invalid assignment '" + part + "'");
      }
      assignments.push_back(std::move(a));
    }
    if (assignments.empty()) {
      throw std::runtime_error(where() + ": no assignments");
    }
    rules.add_rule(pattern, std::move(assignments));
  }
  rules.compile();
  return rules;
}

void ProfileRules::add_rule(const std::string& pattern,
                            std::vector<Assignment> assignments) {
  if (compiled_) throw std::logic_error("add_rule after compile");
  patterns_.push_back(pattern);
  assignments_.push_back(std::move(assignments));
}

void ProfileRules::compile() {
  const Vocabulary no_vocab;
  for (const auto& pattern : patterns_) {
    const TokenizedText toks =
        tokenize(normalize(lower_ascii(pattern), no_vocab));
    std::vector<std::string> words;
    for (const auto& t : toks.tokens) words.push_back(t.text);
    if (words.empty()) {
      throw std::runtime_error("profile rule pattern is empty: '" + pattern +
                               "'");
    }
    matcher_.add_pattern(words);
  }
  if (!patterns_.empty()) matcher_.compile();
  compiled_ = true;
}

ProfileRules ProfileRules::bundled_defaults() {
  ProfileRules rules;
  rules.add_rule("motherhood challenges with my new baby",
                 {{"gender", "female"}, {"parental_status", "parent"}});
  rules.add_rule("got a new a lovely child", {{"parental_status", "parent"}});
  rules.compile();
  return rules;
}

void ProfileRules::apply(const std::string& raw_text,
                         AuthorProfile& profile) const {
  if (!compiled_ || patterns_.empty() || raw_text.empty()) return;
  const Vocabulary no_vocab;
  const TokenizedText toks =
      tokenize(normalize(lower_ascii(raw_text), no_vocab));
  auto hits = matcher_.find_all(toks.tokens);
  std::sort(hits.begin(), hits.end(),
            [](const TokenPatternSet::Hit& a, const TokenPatternSet::Hit& b) {
              return a.pattern_id < b.pattern_id;
            });
  for (const auto& hit : hits) {
    for (const Assignment& a : assignments_[hit.pattern_id]) {
      if (a.field == "gender" && profile.gender == Gender::unknown) {
        profile.gender = a.value == "male" ? Gender::male : Gender::female;
      } else if (a.field == "marital_status" &&
                 profile.marital_status == MaritalStatus::unknown) {
        profile.marital_status = a.value == "single" ? MaritalStatus::single
                                                     : MaritalStatus::married;
      } else if (a.field == "parental_status" &&
                 profile.parental_status == ParentalStatus::not_stated) {
        profile.parental_status = ParentalStatus::parent;
      } else if (a.field == "country" &&
                 (profile.country.empty() || profile.country == "unknown")) {
        profile.country = canonical_country(a.value);
      } else if (a.field == "city" && !profile.city.has_value()) {
        profile.city = a.value;
      }
    }
  }
}

AuthorProfile extract_profile(const DocumentRecord& record,
                              const ProfileRules& rules) {
  AuthorProfile profile;
  if (record.author.has_value()) {
    const AuthorMeta& meta = *record.author;
    profile.user_id = meta.user_id;
    profile.gender = meta.gender;
    if (meta.country.has_value() && !meta.country->empty()) {
      profile.country = canonical_country(*meta.country);
    }
    profile.city = meta.city;
    profile.marital_status = meta.marital_status;
  }
  // Patterns fill only what the metadata left unknown.
  rules.apply(record.text, profile);
  if (record.author.has_value() && record.author->description.has_value()) {
    rules.apply(*record.author->description, profile);
  }
  return profile;
}

std::string_view to_string(AggregateDimension d) {
  switch (d) {
    case AggregateDimension::gender: return "gender";
    case AggregateDimension::country: return "country";
    case AggregateDimension::gender_x_polarity: return "gender_x_polarity";
    case AggregateDimension::country_x_polarity: return "country_x_polarity";
  }
  return "";
}

std::optional<AggregateDimension> parse_dimension(std::string_view s) {
  for (AggregateDimension d :
       {AggregateDimension::gender, AggregateDimension::country,
        AggregateDimension::gender_x_polarity,
        AggregateDimension::country_x_polarity}) {
    if (s == to_string(d)) return d;
  }
  return std::nullopt;
}

size_t AggregateReport::total_positive() const {
  size_t n = 0;
  for (const auto& row : rows) n += row.positive;
  return n;
}

size_t AggregateReport::total_negative() const {
  size_t n = 0;
  for (const auto& row : rows) n += row.negative;
  return n;
}

std::string AggregateReport::to_csv() const {
  std::ostringstream out;
  out << "bucket,positive,negative\n";
  for (const auto& row : rows) {
    std::string bucket = row.bucket;
    // CSV-quote buckets containing separators.
    if (bucket.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : bucket) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
      }
      quoted += "\"";
      bucket = quoted;
    }
    out << bucket << ',' << row.positive << ',' << row.negative << '\n';
  }
  out << "total," << total_positive() << ',' << total_negative() << '\n';
  return out.str();
}

Aggregator::Aggregator(AggregateDimension dimension) : dimension_(dimension) {}

void Aggregator::count(bool relevant, Label label,
                       const AuthorProfile* profile) {
  if (!relevant || label == Label::neutral) return;
  std::string bucket = "unknown";
  switch (dimension_) {
    case AggregateDimension::gender:
    case AggregateDimension::gender_x_polarity:
      bucket = profile ? std::string(to_string(profile->gender)) : "unknown";
      break;
    case AggregateDimension::country:
    case AggregateDimension::country_x_polarity:
      bucket = profile ? profile->country : "unknown";
      break;
  }
  auto& cell = counts_[bucket];
  if (label == Label::positive) {
    ++cell.first;
  } else {
    ++cell.second;
  }
}

void Aggregator::add(const SentimentResult& result,
                     const AuthorProfile* profile) {
  count(result.relevant, result.label, profile);
}

void Aggregator::add(const PredictedResult& result,
                     const AuthorProfile* profile) {
  count(result.relevant, result.label, profile);
}

void Aggregator::merge(const Aggregator& other) {
  if (other.dimension_ != dimension_) {
    throw std::invalid_argument("cannot merge aggregators over different dimensions");
  }
  for (const auto& [bucket, cell] : other.counts_) {
    auto& mine = counts_[bucket];
    mine.first += cell.first;
    mine.second += cell.second;
  }
}

AggregateReport Aggregator::report() const {
  AggregateReport report;
  report.dimension = dimension_;
  for (const auto& [bucket, cell] : counts_) {
    report.rows.push_back({bucket, cell.first, cell.second});
  }
  return report;  // std::map iteration is already bucket-sorted
}

AggregateReport aggregate(const std::vector<SentimentResult>& results,
                          const std::map<std::string, AuthorProfile>& profiles,
                          AggregateDimension dimension) {
  Aggregator agg(dimension);
  for (const auto& result : results) {
    auto it = profiles.find(result.doc_id);
    agg.add(result, it == profiles.end() ? nullptr : &it->second);
  }
  return agg.report();
}

}  // namespace arasent
