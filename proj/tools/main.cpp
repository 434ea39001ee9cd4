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
// Subcommand front end: normalize, translit, dedup, sample, classify,
// evaluate, aggregate, lexicon check.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arasent/classifier.hpp"
#include "arasent/corpus.hpp"
#include "arasent/eval.hpp"
#include "arasent/lexicon.hpp"
#include "arasent/normalizer.hpp"
#include "arasent/pipeline.hpp"
#include "arasent/profiles.hpp"
#include "arasent/translit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitData = 3;

struct Options {
  // normalize
  std::string wordlist;
  std::vector<std::string> lexicons;
  // translit
  std::string table_path;
  std::string exclusion_path;
  size_t beam_width = 16;
  // shared IO
  std::string input;
  std::string output;
  std::string rest_output;
  bool strict = false;
  // sample
  size_t per_class = 400;
  uint64_t seed = 0;
  // classify
  std::string config_path;
  size_t workers = arasent::default_worker_count();
  // evaluate
  std::string gold_path;
  std::string pred_path;
  // aggregate
  std::string results_path;
  std::string docs_path;
  std::string dimension = "gender_x_polarity";
  std::string rules_path;
  // lexicon check
  std::vector<std::string> check_files;
};

arasent::Vocabulary build_vocabulary(const Options& opt) {
  arasent::Vocabulary vocab;
  if (!opt.lexicons.empty()) {
    const arasent::Lexicon lexicon = arasent::load_lexicon(opt.lexicons);
    arasent::add_lexicon_to_vocabulary(lexicon, vocab);
  }
  if (!opt.wordlist.empty()) vocab.add_wordlist_file(opt.wordlist);
  return vocab;
}

int run_normalize(const Options& opt) {
  arasent::Vocabulary vocab;
  try {
    vocab = build_vocabulary(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    std::cout << arasent::normalize(line, vocab) << "\n";
  }
  return kExitOk;
}

int run_translit(const Options& opt) {
  arasent::PhraseTable table;
  arasent::ExclusionList exclusion;
  try {
    table = arasent::load_phrase_table(opt.table_path);
    if (!opt.exclusion_path.empty()) exclusion.add_file(opt.exclusion_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  arasent::DecoderParams params;
  params.beam_width = opt.beam_width;
  params.max_phrase_len = table.max_phrase_len();
  std::string line;
  while (std::getline(std::cin, line)) {
    try {
      std::cout << arasent::transliterate_text(line, table, exclusion, params,
                                               opt.strict)
                << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitData;
    }
  }
  return kExitOk;
}

int run_dedup(const Options& opt) {
  arasent::Vocabulary vocab;
  try {
    vocab = build_vocabulary(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "error: cannot open input file: " << opt.input << "\n";
    return kExitResource;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << opt.output << "\n";
    return kExitResource;
  }
  arasent::Deduper deduper(&vocab);
  std::string line;
  size_t lineno = 0;
  size_t kept = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto parsed = arasent::parse_record_line(line, lineno);
    if (std::holds_alternative<arasent::Diagnostic>(parsed)) {
      const auto& d = std::get<arasent::Diagnostic>(parsed);
      if (opt.strict) {
        std::cerr << "error: " << opt.input << ":" << d.line_number << ": "
                  << d.message << "\n";
        return kExitData;
      }
      std::cerr << "warning: " << opt.input << ":" << d.line_number << ": "
                << d.message << "\n";
      continue;
    }
    if (deduper.should_keep(std::get<arasent::DocumentRecord>(parsed))) {
      out << line << "\n";
      ++kept;
    }
  }
  std::cerr << "kept " << kept << " records (" << deduper.retweets_dropped()
            << " retweets, " << deduper.duplicates_dropped()
            << " duplicates dropped)\n";
  return kExitOk;
}

int run_sample(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "error: cannot open input file: " << opt.input << "\n";
    return kExitResource;
  }
  std::vector<arasent::AnnotatedRecord> records;
  std::map<size_t, std::string> raw_lines;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto parsed = arasent::parse_annotated_line(line, lineno);
    if (std::holds_alternative<arasent::Diagnostic>(parsed)) {
      const auto& d = std::get<arasent::Diagnostic>(parsed);
      if (opt.strict) {
        std::cerr << "error: " << opt.input << ":" << d.line_number << ": "
                  << d.message << "\n";
        return kExitData;
      }
      std::cerr << "warning: " << opt.input << ":" << d.line_number << ": "
                << d.message << "\n";
      continue;
    }
    raw_lines[lineno] = line;
    records.push_back(std::get<arasent::AnnotatedRecord>(std::move(parsed)));
  }

  arasent::SampleSplit split;
  try {
    split = arasent::sample_balanced(records, opt.per_class, opt.seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  const auto write_split = [&](const std::string& path,
                               const std::vector<arasent::AnnotatedRecord>& rs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << path << "\n";
      return false;
    }
    for (const auto& r : rs) out << raw_lines.at(r.record.line_number) << "\n";
    return true;
  };
  if (!write_split(opt.output, split.test)) return kExitResource;
  if (!opt.rest_output.empty() && !write_split(opt.rest_output, split.dev)) {
    return kExitResource;
  }
  std::cerr << "sampled " << split.test.size() << " test / " << split.dev.size()
            << " dev records\n";
  return kExitOk;
}

int run_classify(const Options& opt) {
  arasent::RunConfig config;
  arasent::Resources resources;
  try {
    config = arasent::load_run_config(opt.config_path);
    resources = arasent::load_resources(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  try {
    const arasent::RunManifest manifest =
        arasent::run_pipeline(resources, config, opt.config_path, opt.input,
                              opt.output, opt.workers, opt.strict);
    std::cerr << "classified " << manifest.input_records << " records in "
              << manifest.wall_seconds << "s ("
              << static_cast<size_t>(manifest.docs_per_second)
              << " docs/s, workers=" << manifest.workers << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

int run_evaluate(const Options& opt) {
  arasent::EvalReport report;
  try {
    report = arasent::eval_report(opt.gold_path, opt.pred_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  std::cout << report.render_table();
  if (!opt.output.empty()) {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << opt.output << "\n";
      return kExitResource;
    }
    out << report.to_csv();
  }
  return kExitOk;
}

int run_aggregate(const Options& opt) {
  const auto dimension = arasent::parse_dimension(opt.dimension);
  if (!dimension) {
    std::cerr << "error: unknown dimension '" << opt.dimension << "'\n";
    return kExitUsage;
  }
  arasent::ProfileRules rules;
  try {
    rules = opt.rules_path.empty()
                ? arasent::ProfileRules::bundled_defaults()
                : arasent::ProfileRules::load(opt.rules_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }

  std::map<std::string, arasent::AuthorProfile> profiles;
  try {
    const arasent::ReadResult docs = arasent::read_records(opt.docs_path);
    for (const auto& d : docs.diagnostics) {
      std::cerr << "warning: " << opt.docs_path << ":" << d.line_number << ": "
                << d.message << "\n";
    }
    for (const auto& record : docs.records) {
      profiles.emplace(record.id, arasent::extract_profile(record, rules));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }

  arasent::Aggregator aggregator(*dimension);
  std::ifstream in(opt.results_path);
  if (!in) {
    std::cerr << "error: cannot open results file: " << opt.results_path
              << "\n";
    return kExitResource;
  }
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto parsed = arasent::parse_result_line(line, lineno);
    if (std::holds_alternative<arasent::Diagnostic>(parsed)) {
      const auto& d = std::get<arasent::Diagnostic>(parsed);
      std::cerr << "warning: " << opt.results_path << ":" << d.line_number
                << ": " << d.message << "\n";
      continue;
    }
    const auto& result = std::get<arasent::PredictedResult>(parsed);
    auto it = profiles.find(result.id);
    aggregator.add(result, it == profiles.end() ? nullptr : &it->second);
  }

  const arasent::AggregateReport report = aggregator.report();
  if (opt.output.empty() || opt.output == "-") {
    std::cout << report.to_csv();
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << opt.output << "\n";
      return kExitResource;
    }
    out << report.to_csv();
  }
  return kExitOk;
}

int run_lexicon_check(const Options& opt) {
  arasent::Lexicon lexicon;
  try {
    lexicon = arasent::load_lexicon(opt.check_files);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  for (const auto& w : lexicon.warnings) {
    std::cerr << "warning: " << w.file << ":" << w.line << ": " << w.message
              << "\n";
  }
  std::cout << "entries: " << lexicon.entries.size() << "\n";
  for (const auto& [category, count] : lexicon.category_counts()) {
    std::cout << arasent::to_string(category) << ": " << count << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based Arabic dialect sentiment extraction pipeline"};
  app.set_version_flag("--version", std::string(arasent::kToolVersion));
  app.require_subcommand(1);

  Options opt;

  auto* normalize = app.add_subcommand(
      "normalize", "Normalize Arabic text read from stdin, line by line");
  normalize->add_option("--wordlist", opt.wordlist,
                        "Known-words file for elongation collapsing");
  normalize->add_option("--lexicon", opt.lexicons,
                        "Lexicon TSV whose surfaces seed the vocabulary");

  auto* translit = app.add_subcommand(
      "translit", "Transliterate romanized Arabic on stdin to Arabic script");
  translit->add_option("--table", opt.table_path, "Phrase table TSV")
      ->required();
  translit->add_option("--exclude", opt.exclusion_path,
                       "Exclusion list, one word per line");
  translit->add_option("--beam", opt.beam_width, "Beam width (default 16)");
  translit->add_flag("--strict", opt.strict,
                     "Fail on the first undecodable token");

  auto* dedup = app.add_subcommand(
      "dedup", "Drop duplicate and retweeted records from a JSONL stream");
  dedup->add_option("--input", opt.input, "Input JSONL")->required();
  dedup->add_option("--output", opt.output, "Output JSONL")->required();
  dedup->add_option("--wordlist", opt.wordlist,
                    "Known-words file for the normalization fingerprint");
  dedup->add_option("--lexicon", opt.lexicons,
                    "Lexicon TSV whose surfaces seed the vocabulary");
  dedup->add_flag("--strict", opt.strict, "Abort on malformed lines");

  auto* sample = app.add_subcommand(
      "sample", "Balanced per-class sampling of an annotated JSONL corpus");
  sample->add_option("--input", opt.input, "Annotated JSONL")->required();
  sample->add_option("--per-class", opt.per_class, "Records per class")
      ->required();
  sample->add_option("--seed", opt.seed, "PRNG seed")->required();
  sample->add_option("--output", opt.output, "Test split JSONL")->required();
  sample->add_option("--rest", opt.rest_output, "Development split JSONL");
  sample->add_flag("--strict", opt.strict, "Abort on malformed lines");

  auto* classify = app.add_subcommand(
      "classify", "Classify a JSONL corpus with the rule pipeline");
  classify->add_option("--config", opt.config_path, "Run config JSON")
      ->required();
  classify->add_option("--input", opt.input, "Input JSONL")->required();
  classify->add_option("--output", opt.output, "Results JSONL")->required();
  classify->add_option("--workers", opt.workers,
                       "Worker threads (default: ARASENT_WORKERS or cores)");
  classify->add_flag("--strict", opt.strict, "Abort on malformed records");

  auto* evaluate = app.add_subcommand(
      "evaluate", "Score predictions against gold labels");
  evaluate->add_option("--gold", opt.gold_path, "Annotated gold JSONL")
      ->required();
  evaluate->add_option("--pred", opt.pred_path, "Classifier results JSONL")
      ->required();
  evaluate->add_option("--output", opt.output, "Metrics CSV");

  auto* aggregate = app.add_subcommand(
      "aggregate", "Aggregate sentiment results by author segment");
  aggregate->add_option("--results", opt.results_path, "Results JSONL")
      ->required();
  aggregate->add_option("--docs", opt.docs_path, "Source documents JSONL")
      ->required();
  aggregate->add_option("--by", opt.dimension,
                        "gender|country|gender_x_polarity|country_x_polarity");
  aggregate->add_option("--rules", opt.rules_path, "Profile pattern rules TSV");
  aggregate->add_option("--output", opt.output, "Report CSV (default stdout)");

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon utilities");
  auto* check = lexicon->add_subcommand(
      "check", "Validate lexicon files and print category counts");
  check->add_option("files", opt.check_files, "Lexicon TSV files")->required();
  lexicon->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (normalize->parsed()) return run_normalize(opt);
  if (translit->parsed()) return run_translit(opt);
  if (dedup->parsed()) return run_dedup(opt);
  if (sample->parsed()) return run_sample(opt);
  if (classify->parsed()) return run_classify(opt);
  if (evaluate->parsed()) return run_evaluate(opt);
  if (aggregate->parsed()) return run_aggregate(opt);
  if (lexicon->parsed() && check->parsed()) return run_lexicon_check(opt);
  return kExitUsage;
}
