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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "run_command.h"
#include "wildlife/event_store.h"

namespace fs = std::filesystem;

namespace {

const std::string kCli = WILDLIFE_CLI;
const std::string kBriefs = WILDLIFE_FIXTURE_DIR "/briefs";
const std::string kGold = WILDLIFE_FIXTURE_DIR "/gold.csv";

fs::path Scratch(const char *name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CommandResult Cli(const std::string &args) { return RunCommand(Quote(kCli) + " " + args); }

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("help exits 0 without side effects") {
  const fs::path dir = Scratch("wildlife_cli_help");
  for (const char *sub : {"", "extract", "eval", "export", "report", "lexicon-validate"}) {
    INFO(sub);
    const auto r = RunCommand("cd " + Quote(dir.string()) + " && " + Quote(kCli) + " " + sub +
                              " --help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Usage") != std::string::npos);
  }
  CHECK(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit 1") {
  CHECK(Cli("").exit_code == 1);
  CHECK(Cli("frobnicate").exit_code == 1);
  CHECK(Cli("extract --no-such-flag x").exit_code == 1);
  CHECK(Cli("extract --jobs -3 " + Quote(kBriefs)).exit_code == 1);
  CHECK(Cli("export --store /nonexistent/x.db --out /tmp/x.csv").exit_code == 1);
  CHECK(Cli("extract /nonexistent/dir").exit_code == 1);
  CHECK(Cli("extract --animals /nonexistent/a.csv " + Quote(kBriefs)).exit_code == 1);
}

TEST_CASE("extract a single brief") {
  const fs::path dir = Scratch("wildlife_cli_one");
  const std::string store = Quote((dir / "s.db").string());
  const auto r = Cli("extract --store " + store + " " + Quote(kBriefs + "/fixture-2021-01.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fixture-2021-01: 2 events") != std::string::npos);
  CHECK(wildlife::EventStore(dir / "s.db").EventCount() == 2);
  fs::remove_all(dir);
}

TEST_CASE("partial batch failure") {
  const fs::path dir = Scratch("wildlife_cli_partial");
  fs::create_directories(dir / "in");
  std::ofstream(dir / "in" / "good-2021-07.txt") << "Two lions were seized in Togo.";
  std::ofstream(dir / "in" / "notes.txt") << "A lion.";
  const std::string store = Quote((dir / "s.db").string());
  const auto r = Cli("extract --store " + store + " " + Quote((dir / "in").string()));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("notes.txt") != std::string::npos);
  CHECK(r.output.find("good-2021-07: 1 event") != std::string::npos);
  CHECK(wildlife::EventStore(dir / "s.db").EventCount() == 1);
  fs::remove_all(dir);
}

TEST_CASE("empty directory and empty-store report") {
  const fs::path dir = Scratch("wildlife_cli_empty");
  fs::create_directories(dir / "in");
  const std::string store = Quote((dir / "s.db").string());
  auto r = Cli("extract --store " + store + " " + Quote((dir / "in").string()));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total: 0 events") != std::string::npos);
  r = Cli("report --store " + store + " --out " + Quote((dir / "rep").string()));
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "rep" / "summary.json"));
  CHECK(fs::exists(dir / "rep" / "dashboard.html"));
  CHECK(Slurp(dir / "rep" / "summary.json").find("\"total_events\": 0") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("re-extraction leaves the store unchanged") {
  const fs::path dir = Scratch("wildlife_cli_twice");
  const std::string store = Quote((dir / "s.db").string());
  REQUIRE(Cli("extract --store " + store + " " + Quote(kBriefs)).exit_code == 0);
  REQUIRE(Cli("export --store " + store + " --out " + Quote((dir / "one.csv").string()))
              .exit_code == 0);
  REQUIRE(Cli("extract --jobs 3 --store " + store + " " + Quote(kBriefs)).exit_code == 0);
  REQUIRE(Cli("export --store " + store + " --out " + Quote((dir / "two.csv").string()))
              .exit_code == 0);
  CHECK(Slurp(dir / "one.csv") == Slurp(dir / "two.csv"));
  // Export then import gives the same events back.
  const auto imported = wildlife::ImportCsv(dir / "one.csv");
  CHECK(imported.size() == wildlife::EventStore(dir / "s.db").Events().size());
  fs::remove_all(dir);
}

TEST_CASE("eval") {
  const fs::path dir = Scratch("wildlife_cli_eval");
  auto r = Cli("eval --pred " + Quote(kGold) + " --gold " + Quote(kGold) + " --out " +
               Quote(dir.string()));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fully=12 partial=0 unrelated=0 undetected=0 total_gold=12") !=
        std::string::npos);
  const std::string kv = Slurp(dir / "eval_report.kv");
  CHECK(kv.find("fully_correct: 12\n") != std::string::npos);
  CHECK(kv.find("detection_rate: 1.000000\n") != std::string::npos);

  std::ofstream(dir / "bad.csv") << "report,year\nx,2020\n";
  r = Cli("eval --pred " + Quote(kGold) + " --gold " + Quote((dir / "bad.csv").string()) +
          " --out " + Quote(dir.string()));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("header") != std::string::npos);

  r = Cli("eval --eligibility sometimes --pred " + Quote(kGold) + " --gold " + Quote(kGold));
  CHECK(r.exit_code == 1);
  fs::remove_all(dir);
}

TEST_CASE("lexicon-validate") {
  const fs::path dir = Scratch("wildlife_cli_lexicon");
  auto r = Cli("lexicon-validate");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("animals.csv: 256 rows") != std::string::npos);

  std::ofstream(dir / "dup.csv") << "surface,label,canonical\ntusk,PRODUCT,\ntusk,ANIMAL,\n";
  r = Cli("lexicon-validate " + Quote((dir / "dup.csv").string()));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("dup.csv:2") != std::string::npos);
  CHECK(r.output.find("dup.csv:3") != std::string::npos);

  std::ofstream(dir / "turkey.csv") << "surface,label,canonical\nTurkey,COUNTRY,\n";
  r = Cli("lexicon-validate " + Quote((dir / "turkey.csv").string()) + " " +
          Quote(WILDLIFE_DATA_DIR "/animals.csv"));
  CHECK(r.exit_code == 1);
  fs::remove_all(dir);
}
