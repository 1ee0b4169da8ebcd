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
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "wildlife/errors.h"
#include "wildlife/pipeline.h"

namespace fs = std::filesystem;
using namespace wildlife;

namespace {

const Pipeline &Shipped() {
  static const Pipeline pipeline(Lexicon::Merge({LoadLexicon(WILDLIFE_DATA_DIR "/animals.csv"),
                                                 LoadLexicon(WILDLIFE_DATA_DIR "/products.csv"),
                                                 LoadLexicon(WILDLIFE_DATA_DIR "/countries.csv")}),
                                 LoadHeuristics(WILDLIFE_DATA_DIR "/heuristics.conf"),
                                 AbbreviationSet::Load(WILDLIFE_DATA_DIR "/abbreviations.txt"));
  return pipeline;
}

fs::path ScratchDir(const char *name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("heuristics config") {
  const HeuristicConfig shipped = LoadHeuristics(WILDLIFE_DATA_DIR "/heuristics.conf");
  CHECK(shipped.pairing_window == 3);
  CHECK(shipped.quantity_window == 2);
  CHECK(shipped.arrest_window == 5);
  CHECK(shipped.arrest_default == 1);
  const HeuristicConfig c = ParseHeuristics("# c\npairing_window = 4\n\narrest_default=0\n");
  CHECK(c.pairing_window == 4);
  CHECK(c.arrest_default == 0);
  CHECK(c.quantity_window == 2);
  CHECK_THROWS_AS(ParseHeuristics("pairing = 4\n"), ParseError);
  CHECK_THROWS_AS(ParseHeuristics("pairing_window = four\n"), ParseError);
  CHECK_THROWS_AS(ParseHeuristics("pairing_window\n"), ParseError);
}

TEST_CASE("collect inputs") {
  const fs::path dir = ScratchDir("wildlife_collect_test");
  std::ofstream(dir / "b-2020-02.txt") << "x";
  std::ofstream(dir / "a-2020-01.txt") << "x";
  std::ofstream(dir / ".hidden-2020-01.txt") << "x";
  fs::create_directories(dir / "sub");
  const auto files = CollectInputs({dir});
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "a-2020-01.txt");
  CHECK(files[1].filename() == "b-2020-02.txt");
  CHECK(CollectInputs({dir / "a-2020-01.txt"}).size() == 1);
  CHECK_THROWS_AS(CollectInputs({dir / "missing"}), Error);
  fs::remove_all(dir);
}

TEST_CASE("failures stay per file") {
  const fs::path dir = ScratchDir("wildlife_failure_test");
  std::ofstream(dir / "good-2020-01.txt") << "Two pangolins were seized in Gabon.";
  std::ofstream(dir / "misnamed.txt") << "A lion.";
  std::ofstream(dir / "bad-2020-02.txt") << "bad \xc3\x28 bytes";
  const auto results = ExtractCorpus(CollectInputs({dir}), Shipped(), 2);
  REQUIRE(results.size() == 3);
  CHECK_FALSE(results[0].ok());  // bad-2020-02: encoding
  CHECK(results[1].ok());
  CHECK(results[1].events.size() == 1);
  CHECK(results[1].report.report_id == "good-2020-01");
  CHECK_FALSE(results[2].ok());  // misnamed
  CHECK(results[2].error.find("misnamed") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("parallel extraction equals the serial reference") {
  const fs::path dir = ScratchDir("wildlife_parallel_test");
  const std::vector<std::string> sentences = {
      "Police in Gabon arrested three men with 12 elephant tusks.",
      "A pangolin and 40 kg of scales were seized.",
      "Two suspects were detained in Togo.",
      "Officials in Cameroon recovered 5 grey parrots.",
      "The workshop covered law enforcement.",
      "In Côte d'Ivoire, 2 tons of ivory were found.",
      "Mr. Ndong was jailed for selling leopard skins."};
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "brief%02d-20%02d-%02d.txt", i, 10 + i % 12, 1 + i % 12);
    std::ofstream out(dir / name);
    const int paragraphs = 1 + static_cast<int>(rng() % 5);
    for (int p = 0; p < paragraphs; ++p) {
      const int n = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < n; ++k) out << sentences[rng() % sentences.size()] << ' ';
      out << "\n\n";
    }
  }
  const auto files = CollectInputs({dir});
  const auto serial = ExtractCorpusSerial(files, Shipped());
  size_t total = 0;
  for (int jobs : {0, 1, 2, 4, 8}) {
    const auto parallel = ExtractCorpus(files, Shipped(), jobs);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      REQUIRE(parallel[i].path == serial[i].path);
      REQUIRE(parallel[i].error == serial[i].error);
      REQUIRE(parallel[i].events == serial[i].events);
    }
  }
  for (const auto &r : serial) {
    CHECK(r.ok());
    total += r.events.size();
  }
  CHECK(total > 100);
  fs::remove_all(dir);
}
