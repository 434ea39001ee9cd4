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

#ifndef ARASENT_EVAL_HPP_
#define ARASENT_EVAL_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "arasent/label.hpp"

namespace arasent {

struct ConfusionCounts {
  // matrix[gold][predicted] over (positive, negative, neutral).
  std::array<std::array<size_t, 3>, 3> matrix{};

  size_t& at(Label gold, Label pred) {
    return matrix[static_cast<size_t>(gold)][static_cast<size_t>(pred)];
  }
  size_t get(Label gold, Label pred) const {
    return matrix[static_cast<size_t>(gold)][static_cast<size_t>(pred)];
  }
  size_t total() const;
};

ConfusionCounts confusion(const std::vector<Label>& gold,
                          const std::vector<Label>& pred);

// Percentages. Zero denominators read as zero; f1 is zero when p+r=0.
struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

ClassMetrics precision_recall_f1(const ConfusionCounts& counts, Label cls);

// Standalone F from percentage precision/recall, the same arithmetic
// the per-class metrics use.
double f_measure(double precision, double recall);

struct EvalReport {
  ConfusionCounts counts;
  std::array<ClassMetrics, 3> per_class;  // indexed by Label

  // Table matching the classification-results layout: one row per
  // class with precision, recall and F-measure at two decimals.
  std::string render_table() const;
  std::string to_csv() const;
};

EvalReport make_report(const ConfusionCounts& counts);

// Joins a gold JSONL file (annotated records) with a prediction JSONL
// file (classifier results) on id. Throws when the id sets differ,
// listing the offending ids.
EvalReport eval_report(const std::string& gold_path,
                       const std::string& pred_path);

}  // namespace arasent

#endif  // ARASENT_EVAL_HPP_
