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

#include "arasent/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "arasent/hash.hpp"

namespace arasent {

namespace {

// Single-producer/multi-consumer blocking queue with a capacity bound;
// closing wakes every waiter.
template <typename T>
class BoundedQueue {
 public:
  explicit BoundedQueue(size_t capacity) : capacity_(capacity) {}

  bool push(T item) {
    std::unique_lock<std::mutex> lock(mutex_);
    not_full_.wait(lock,
                   [this] { return closed_ || items_.size() < capacity_; });
    if (closed_) return false;
    items_.push_back(std::move(item));
    lock.unlock();
    not_empty_.notify_one();
    return true;
  }

  std::optional<T> pop() {
    std::unique_lock<std::mutex> lock(mutex_);
    not_empty_.wait(lock, [this] { return closed_ || !items_.empty(); });
    if (items_.empty()) return std::nullopt;
    T item = std::move(items_.front());
    items_.pop_front();
    lock.unlock();
    not_full_.notify_one();
    return item;
  }

  void close() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      closed_ = true;
    }
    not_full_.notify_all();
    not_empty_.notify_all();
  }

 private:
  std::mutex mutex_;
  std::condition_variable not_full_;
  std::condition_variable not_empty_;
  std::deque<T> items_;
  size_t capacity_;
  bool closed_ = false;
};

struct WorkItem {
  uint64_t seq;
  size_t line_number;
  std::string line;
};

enum class ResultKind { ok, retweet, parse_error };

struct ResultItem {
  uint64_t seq = 0;
  ResultKind kind = ResultKind::ok;
  uint64_t fingerprint = 0;
  bool relevant = false;
  Label label = Label::neutral;
  std::string payload;  // result JSON line, or the error message
  size_t line_number = 0;
};

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

constexpr size_t kQueueCapacity = 1024;

}  // namespace

std::string RunManifest::to_json() const {
  nlohmann::ordered_json obj;
  obj["tool_version"] = tool_version;
  obj["use_case"] = use_case;
  obj["config_path"] = config_path;
  obj["config_hash"] = config_hash;
  obj["input_path"] = input_path;
  obj["input_hash"] = input_hash;
  obj["workers"] = workers;
  obj["wall_seconds"] = wall_seconds;
  obj["docs_per_second"] = docs_per_second;
  obj["counts"]["input_records"] = input_records;
  obj["counts"]["parse_errors"] = parse_errors;
  obj["counts"]["retweets_dropped"] = retweets_dropped;
  obj["counts"]["duplicates_dropped"] = duplicates_dropped;
  obj["counts"]["after_dedup"] = after_dedup;
  obj["counts"]["relevant"] = relevant;
  obj["counts"]["labeled_positive"] = labeled_positive;
  obj["counts"]["labeled_negative"] = labeled_negative;
  obj["counts"]["labeled_neutral"] = labeled_neutral;
  return obj.dump(2);
}

size_t default_worker_count() {
  if (const char* env = std::getenv("ARASENT_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

uint64_t hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buf, static_cast<size_t>(in.gcount())), h);
  }
  return h;
}

}  // namespace

RunManifest run_pipeline(const Resources& resources, const RunConfig& config,
                         const std::string& config_path,
                         const std::string& input_path,
                         const std::string& output_path, size_t workers,
                         bool strict) {
  if (workers < 1) workers = 1;
  const auto start = std::chrono::steady_clock::now();

  RunManifest manifest;
  manifest.use_case = config.pipeline.use_case;
  manifest.config_path = config_path;
  manifest.config_hash =
      config_path.empty() ? "" : hex64(hash_file(config_path));
  manifest.input_path = input_path;
  manifest.input_hash = hex64(hash_file(input_path));
  manifest.workers = workers;

  std::ifstream input(input_path);
  if (!input) throw std::runtime_error("cannot open input file: " + input_path);
  std::ofstream output(output_path, std::ios::binary);
  if (!output) {
    throw std::runtime_error("cannot open output file: " + output_path);
  }

  BoundedQueue<WorkItem> work_queue(kQueueCapacity);
  BoundedQueue<ResultItem> result_queue(kQueueCapacity);
  std::atomic<bool> stop{false};

  std::thread reader([&] {
    std::string line;
    uint64_t seq = 0;
    size_t lineno = 0;
    while (std::getline(input, line)) {
      ++lineno;
      if (stop.load(std::memory_order_relaxed)) break;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (!work_queue.push({seq, lineno, std::move(line)})) break;
      ++seq;
      line.clear();
    }
    work_queue.close();
  });

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        auto item = work_queue.pop();
        if (!item.has_value()) break;
        ResultItem result;
        result.seq = item->seq;
        result.line_number = item->line_number;
        auto parsed = parse_record_line(item->line, item->line_number);
        if (std::holds_alternative<Diagnostic>(parsed)) {
          result.kind = ResultKind::parse_error;
          result.payload = std::get<Diagnostic>(parsed).message;
        } else {
          const DocumentRecord& record = std::get<DocumentRecord>(parsed);
          if (Deduper::is_retweet(record)) {
            result.kind = ResultKind::retweet;
          } else {
            result.kind = ResultKind::ok;
            result.fingerprint = fnv1a64(
                normalize(record.text, resources.vocab, resources.norm_opts));
            const SentimentResult sentiment =
                classify(record, resources, config.pipeline);
            result.relevant = sentiment.relevant;
            result.label = sentiment.label;
            result.payload = result_to_jsonl(sentiment);
          }
        }
        if (!result_queue.push(std::move(result))) break;
      }
    });
  }

  std::thread closer([&] {
    for (auto& t : pool) t.join();
    result_queue.close();
  });

  // Writer: restore input order, then run the sequential dedup stage
  // and emit survivors.
  Deduper deduper;
  std::map<uint64_t, ResultItem> pending;
  uint64_t next_seq = 0;
  std::optional<std::string> strict_error;
  for (;;) {
    auto item = result_queue.pop();
    if (!item.has_value()) break;
    pending.emplace(item->seq, std::move(*item));
    while (!pending.empty() && pending.begin()->first == next_seq) {
      ResultItem current = std::move(pending.begin()->second);
      pending.erase(pending.begin());
      ++next_seq;
      ++manifest.input_records;
      switch (current.kind) {
        case ResultKind::parse_error:
          ++manifest.parse_errors;
          if (strict && !strict_error.has_value()) {
            strict_error = input_path + ":" +
                           std::to_string(current.line_number) + ": " +
                           current.payload;
            stop.store(true, std::memory_order_relaxed);
          }
          break;
        case ResultKind::retweet:
          deduper.should_keep_fingerprint(0, /*retweet=*/true);
          break;
        case ResultKind::ok:
          if (!deduper.should_keep_fingerprint(current.fingerprint, false)) {
            break;
          }
          if (!strict_error.has_value()) {
            output << current.payload << '\n';
          }
          ++manifest.after_dedup;
          if (current.relevant) ++manifest.relevant;
          switch (current.label) {
            case Label::positive: ++manifest.labeled_positive; break;
            case Label::negative: ++manifest.labeled_negative; break;
            case Label::neutral: ++manifest.labeled_neutral; break;
          }
          break;
      }
    }
  }

  reader.join();
  closer.join();
  output.close();

  manifest.retweets_dropped = deduper.retweets_dropped();
  manifest.duplicates_dropped = deduper.duplicates_dropped();

  if (strict_error.has_value()) {
    std::filesystem::remove(output_path);
    throw std::runtime_error(*strict_error);
  }

  const auto end = std::chrono::steady_clock::now();
  manifest.wall_seconds =
      std::chrono::duration<double>(end - start).count();
  manifest.docs_per_second =
      manifest.wall_seconds > 0.0
          ? static_cast<double>(manifest.input_records) / manifest.wall_seconds
          : 0.0;

  std::ofstream mf(output_path + ".manifest.json");
  if (!mf) {
    throw std::runtime_error("cannot write manifest for: " + output_path);
  }
  mf << manifest.to_json() << '\n';
  return manifest;
}

}  // namespace arasent
