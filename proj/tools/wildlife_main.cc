// Copyright 2026 The Wildlife Event Extraction Authors.
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

// Command-line driver: extract, eval, export, report, lexicon-validate.
//
// Exit codes: 0 success, 1 usage/format/I-O error, 2 partial batch failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wildlife/errors.h"
#include "wildlife/evaluation.h"
#include "wildlife/event_store.h"
#include "wildlife/lexicon.h"
#include "wildlife/pipeline.h"
#include "wildlife/report.h"

namespace fs = std::filesystem;

namespace {

struct CliConfig {
  std::string animals = WILDLIFE_DATA_DIR "/animals.csv";
  std::string products = WILDLIFE_DATA_DIR "/products.csv";
  std::string countries = WILDLIFE_DATA_DIR "/countries.csv";
  std::string heuristics = WILDLIFE_DATA_DIR "/heuristics.conf";
  std::string abbreviations = WILDLIFE_DATA_DIR "/abbreviations.txt";
  std::string store = "wildlife.db";
  std::string out;
  int jobs = 0;
  std::string eligibility = "what-trafficked";
  bool verbose = false;
};

void RequireFile(const std::string &path, const char *what) {
  if (!fs::is_regular_file(path)) {
    throw wildlife::Error(std::string(what) + " not found: " + path);
  }
}

wildlife::Lexicon LoadLexicons(const CliConfig &cfg) {
  return wildlife::Lexicon::Merge({wildlife::LoadLexicon(cfg.animals),
                                   wildlife::LoadLexicon(cfg.products),
                                   wildlife::LoadLexicon(cfg.countries)});
}

std::string Plural(size_t n, const char *word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

int RunExtract(const CliConfig &cfg, const std::vector<std::string> &inputs) {
  RequireFile(cfg.animals, "animals lexicon");
  RequireFile(cfg.products, "products lexicon");
  RequireFile(cfg.countries, "countries lexicon");
  RequireFile(cfg.heuristics, "heuristics config");
  std::vector<fs::path> input_paths(inputs.begin(), inputs.end());
  const std::vector<fs::path> files = wildlife::CollectInputs(input_paths);

  wildlife::AbbreviationSet abbreviations =
      fs::is_regular_file(cfg.abbreviations)
          ? wildlife::AbbreviationSet::Load(cfg.abbreviations)
          : wildlife::AbbreviationSet::Defaults();
  const wildlife::Pipeline pipeline(LoadLexicons(cfg),
                                    wildlife::LoadHeuristics(cfg.heuristics),
                                    std::move(abbreviations));

  const auto results = wildlife::ExtractCorpus(files, pipeline, cfg.jobs);

  wildlife::EventStore store(cfg.store);
  int failures = 0;
  size_t total = 0;
  for (const auto &r : results) {
    if (!r.ok()) {
      ++failures;
      std::cerr << "error: " << r.path.string() << ": " << r.error << "\n";
      continue;
    }
    // Replaces any events stored earlier for this report, even with none.
    store.Ingest(r.events, {r.report});
    total += r.events.size();
    std::cout << r.report.report_id << ": " << Plural(r.events.size(), "event") << "\n";
    if (cfg.verbose) {
      std::ostringstream rows;
      wildlife::WriteEventsCsv(r.events, rows);
      std::cout << rows.str();
    }
  }
  std::cout << "total: " << Plural(total, "event") << " from "
            << Plural(results.size() - failures, "report") << "\n";
  return failures > 0 ? 2 : 0;
}

int RunEval(const CliConfig &cfg, const std::string &pred, const std::string &gold) {
  std::vector<wildlife::TraffickingEvent> predicted;
  if (!pred.empty()) {
    predicted = wildlife::ImportCsv(pred);
  } else {
    RequireFile(cfg.store, "store");
    predicted = wildlife::EventStore(cfg.store).Events();
  }
  const auto gold_events = wildlife::ImportCsv(gold);
  const auto rule = wildlife::ParseEligibility(cfg.eligibility);
  if (!rule) throw wildlife::UsageError("unknown eligibility rule: " + cfg.eligibility);
  const auto report = wildlife::ComputeReport(
      wildlife::EvaluateCorpus(predicted, gold_events, cfg.jobs, *rule));
  std::cout << report.ToText();
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  std::ofstream kv(dir / "eval_report.kv");
  kv << report.ToKeyValue();
  if (!kv) throw wildlife::Error("cannot write " + (dir / "eval_report.kv").string());
  if (cfg.verbose) std::cout << "wrote " << (dir / "eval_report.kv").string() << "\n";
  return 0;
}

int RunExport(const CliConfig &cfg) {
  RequireFile(cfg.store, "store");
  if (cfg.out.empty()) throw wildlife::UsageError("export needs --out <file.csv>");
  wildlife::EventStore store(cfg.store);
  store.ExportCsv(fs::path(cfg.out));
  std::cout << "exported " << Plural(static_cast<size_t>(store.EventCount()), "event")
            << " to " << cfg.out << "\n";
  return 0;
}

int RunReport(const CliConfig &cfg) {
  RequireFile(cfg.store, "store");
  if (cfg.out.empty()) throw wildlife::UsageError("report needs --out <dir>");
  wildlife::EventStore store(cfg.store);
  const auto rendered = wildlife::Render(store);
  wildlife::WriteReport(rendered, cfg.out);
  std::cout << "wrote " << (fs::path(cfg.out) / "summary.json").string() << " and "
            << (fs::path(cfg.out) / "dashboard.html").string() << "\n";
  return 0;
}

int RunLexiconValidate(const CliConfig &cfg, std::vector<std::string> paths) {
  if (paths.empty()) paths = {cfg.animals, cfg.products, cfg.countries};
  std::vector<wildlife::Lexicon> parts;
  int failures = 0;
  for (const auto &p : paths) {
    try {
      parts.push_back(wildlife::LoadLexicon(p));
      std::cout << p << ": " << Plural(parts.back().entries().size(), "row") << ", "
                << Plural(parts.back().size(), "surface") << "\n";
    } catch (const wildlife::Error &e) {
      ++failures;
      std::cerr << "invalid: " << e.what() << "\n";
    }
  }
  if (failures > 0) return 1;
  try {
    const auto merged = wildlife::Lexicon::Merge(parts);
    std::cout << "merged: " << Plural(merged.size(), "surface") << ", version "
              << merged.version() << "\n";
  } catch (const wildlife::Error &e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extract wildlife trafficking events from enforcement briefs."};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_lexicon_flags = [&](CLI::App *sub) {
    sub->add_option("--animals", cfg.animals, "Animal lexicon CSV");
    sub->add_option("--products", cfg.products, "Product lexicon CSV");
    sub->add_option("--countries", cfg.countries, "Country lexicon CSV");
  };
  auto add_common = [&](CLI::App *sub) {
    sub->add_flag("-v,--verbose", cfg.verbose, "Print more detail");
  };

  std::vector<std::string> inputs;
  auto *extract = app.add_subcommand("extract", "Extract events from briefs into the store");
  extract->add_option("inputs", inputs, "Brief files or directories")->required();
  add_lexicon_flags(extract);
  extract->add_option("--heuristics", cfg.heuristics, "Assembly window config");
  extract->add_option("--abbreviations", cfg.abbreviations, "Abbreviation list");
  extract->add_option("--store", cfg.store, "Event store database");
  extract->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  add_common(extract);

  std::string pred, gold;
  auto *eval = app.add_subcommand("eval", "Score predictions against gold events");
  eval->add_option("--pred", pred, "Predicted events CSV (default: read --store)");
  eval->add_option("--gold", gold, "Gold events CSV")->required();
  eval->add_option("--store", cfg.store, "Event store database");
  eval->add_option("--out", cfg.out, "Directory for eval_report.kv");
  eval->add_option("--eligibility", cfg.eligibility,
                   "Which pairs may match: what-trafficked or any")
      ->check(CLI::IsMember({"what-trafficked", "any"}));
  eval->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  add_common(eval);

  auto *exp = app.add_subcommand("export", "Export stored events as CSV");
  exp->add_option("--store", cfg.store, "Event store database");
  exp->add_option("--out", cfg.out, "Output CSV file")->required();
  add_common(exp);

  auto *report = app.add_subcommand("report", "Write summary.json and dashboard.html");
  report->add_option("--store", cfg.store, "Event store database");
  report->add_option("--out", cfg.out, "Output directory")->required();
  add_common(report);

  std::vector<std::string> lexicon_paths;
  auto *validate = app.add_subcommand("lexicon-validate", "Check lexicon files");
  validate->add_option("paths", lexicon_paths, "Lexicon CSV files");
  add_lexicon_flags(validate);
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*extract) return RunExtract(cfg, inputs);
    if (*eval) return RunEval(cfg, pred, gold);
    if (*exp) return RunExport(cfg);
    if (*report) return RunReport(cfg);
    if (*validate) return RunLexiconValidate(cfg, lexicon_paths);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
