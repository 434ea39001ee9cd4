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

#include "arasent/eval.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "arasent/classifier.hpp"
#include "arasent/corpus.hpp"

namespace arasent {

size_t ConfusionCounts::total() const {
  size_t n = 0;
  for (const auto& row : matrix) {
    for (size_t v : row) n += v;
  }
  return n;
}

ConfusionCounts confusion(const std::vector<Label>& gold,
                          const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument(
        "confusion: gold has " + std::to_string(gold.size()) +
        " labels, predictions have " + std::to_string(pred.size()));
  }
  ConfusionCounts counts;
  for (size_t i = 0; i < gold.size(); ++i) {
    ++counts.at(gold[i], pred[i]);
  }
  return counts;
}

double f_measure(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

ClassMetrics precision_recall_f1(const ConfusionCounts& counts, Label cls) {
  const size_t tp = counts.get(cls, cls);
  size_t fp = 0;
  size_t fn = 0;
  for (Label other : kAllLabels) {
    if (other == cls) continue;
    fp += counts.get(other, cls);
    fn += counts.get(cls, other);
  }
  ClassMetrics m;
  m.precision = tp + fp == 0 ? 0.0 : 100.0 * tp / (tp + fp);
  m.recall = tp + fn == 0 ? 0.0 : 100.0 * tp / (tp + fn);
  m.f1 = f_measure(m.precision, m.recall);
  return m;
}

EvalReport make_report(const ConfusionCounts& counts) {
  EvalReport report;
  report.counts = counts;
  for (Label label : kAllLabels) {
    report.per_class[static_cast<size_t>(label)] =
        precision_recall_f1(counts, label);
  }
  return report;
}

namespace {

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

}  // namespace

std::string EvalReport::render_table() const {
  std::ostringstream out;
  out << "Classification  Precision  Recall  F-measure\n";
  for (Label label : kAllLabels) {
    const auto& m = per_class[static_cast<size_t>(label)];
    char line[128];
    std::snprintf(line, sizeof(line), "%-15s %9s %7s %10s\n",
                  capitalize(to_string(label)).c_str(), fmt2(m.precision).c_str(),
                  fmt2(m.recall).c_str(), fmt2(m.f1).c_str());
    out << line;
  }
  return out.str();
}

std::string EvalReport::to_csv() const {
  std::ostringstream out;
  out << "class,precision,recall,f1\n";
  for (Label label : kAllLabels) {
    const auto& m = per_class[static_cast<size_t>(label)];
    out << to_string(label) << ',' << fmt2(m.precision) << ',' << fmt2(m.recall)
        << ',' << fmt2(m.f1) << '\n';
  }
  return out.str();
}

EvalReport eval_report(const std::string& gold_path,
                       const std::string& pred_path) {
  const AnnotatedReadResult gold = read_annotated(gold_path, /*strict=*/true);

  std::map<std::string, Label> predictions;
  {
    std::ifstream in(pred_path);
    if (!in) throw std::runtime_error("cannot open predictions: " + pred_path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto parsed = parse_result_line(line, lineno);
      if (std::holds_alternative<Diagnostic>(parsed)) {
        const auto& d = std::get<Diagnostic>(parsed);
        throw std::runtime_error(pred_path + ":" +
                                 std::to_string(d.line_number) + ": " +
                                 d.message);
      }
      const auto& result = std::get<PredictedResult>(parsed);
      predictions[result.id] = result.label;
    }
  }

  std::vector<std::string> missing;  // gold ids without predictions
  std::vector<Label> gold_labels;
  std::vector<Label> pred_labels;
  std::map<std::string, bool> gold_ids;
  for (const auto& record : gold.records) {
    gold_ids[record.record.id] = true;
    auto it = predictions.find(record.record.id);
    if (it == predictions.end()) {
      missing.push_back(record.record.id);
      continue;
    }
    gold_labels.push_back(record.gold_label);
    pred_labels.push_back(it->second);
  }
  std::vector<std::string> extra;  // predictions without gold
  for (const auto& [id, label] : predictions) {
    (void)label;
    if (!gold_ids.count(id)) extra.push_back(id);
  }
  if (!missing.empty() || !extra.empty()) {
    std::ostringstream msg;
    msg << "id sets differ:";
    size_t shown = 0;
    for (const auto& id : missing) {
      if (shown++ >= 10) break;
      msg << " missing-prediction:" << id;
    }
    for (const auto& id : extra) {
      if (shown++ >= 20) break;
      msg << " missing-gold:" << id;
    }
    if (missing.size() + extra.size() > shown) {
      msg << " (+" << (missing.size() + extra.size() - shown) << " more)";
    }
    throw std::runtime_error(msg.str());
  }

  return make_report(confusion(gold_labels, pred_labels));
}

}  // namespace arasent
