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
// Parallel batch classification over a JSONL stream: one reader, a
// worker pool over a bounded queue, and an order-preserving writer so
// output is byte-identical for any worker count. Dedup state is
// applied at the writer, in input order.

#ifndef ARASENT_PIPELINE_HPP_
#define ARASENT_PIPELINE_HPP_

#include <cstddef>
#include <string>

#include "arasent/classifier.hpp"

namespace arasent {

inline constexpr const char* kToolVersion = "arasent 0.1.0";

struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string use_case;
  std::string config_path;
  std::string config_hash;  // fnv1a64 of the config file bytes, hex
  std::string input_path;
  std::string input_hash;   // fnv1a64 of the input file bytes, hex
  size_t workers = 0;
  double wall_seconds = 0.0;
  double docs_per_second = 0.0;

  // Telescoped stage counts: input >= after_dedup >= relevant.
  size_t input_records = 0;
  size_t parse_errors = 0;
  size_t retweets_dropped = 0;
  size_t duplicates_dropped = 0;
  size_t after_dedup = 0;
  size_t relevant = 0;
  size_t labeled_positive = 0;
  size_t labeled_negative = 0;
  size_t labeled_neutral = 0;

  std::string to_json() const;
};

// Classifies input_path into output_path (one result line per surviving
// record, input order) and writes the manifest next to the output as
// <output>.manifest.json. Throws on resource failures; in strict mode
// the first malformed record aborts the run and removes the partial
// output.
RunManifest run_pipeline(const Resources& resources, const RunConfig& config,
                         const std::string& config_path,
                         const std::string& input_path,
                         const std::string& output_path, size_t workers,
                         bool strict = false);

// Default worker count: the ARASENT_WORKERS environment variable when
// set, otherwise the hardware concurrency.
size_t default_worker_count();

}  // namespace arasent

#endif  // ARASENT_PIPELINE_HPP_
