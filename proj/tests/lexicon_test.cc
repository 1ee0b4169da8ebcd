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
#include <vector>

#include "doctest.h"
#include "wildlife/errors.h"
#include "wildlife/lexicon.h"

using namespace wildlife;

namespace {

std::string Slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char *const kShipped[] = {WILDLIFE_DATA_DIR "/animals.csv",
                                WILDLIFE_DATA_DIR "/products.csv",
                                WILDLIFE_DATA_DIR "/countries.csv"};

}  // namespace

TEST_CASE("pluralize") {
  CHECK(Pluralize("tusk") == "tusks");
  CHECK(Pluralize("ivory") == "ivory");
  CHECK(Pluralize("sea turtle") == "sea turtles");
  CHECK(Pluralize("goose") == "geese");
  CHECK(Pluralize("mouse") == "mice");
  CHECK(Pluralize("species") == "species");
  CHECK(Pluralize("fish") == "fish");
  CHECK(Pluralize("wolf") == "wolves");
  CHECK(Pluralize("calf") == "calves");
  CHECK(Pluralize("leaf") == "leaves");
  CHECK(Pluralize("butterfly") == "butterflies");
  CHECK(Pluralize("monkey") == "monkeys");
  CHECK(Pluralize("ostrich") == "ostriches");
  CHECK(Pluralize("fox") == "foxes");
  CHECK(Pluralize("walrus") == "walruses");
  CHECK(Pluralize("bush") == "bushes");
  CHECK(Pluralize("giraffe") == "giraffes");
  CHECK(Pluralize("roof") == "roofs");
  CHECK(Pluralize("tooth") == "teeth");
  CHECK(Pluralize("african grey parrot") == "african grey parrots");
  CHECK(Pluralize("") == "");
}

TEST_CASE("singularize by rule") {
  CHECK(SingularizeByRule("tusks") == "tusk");
  CHECK(SingularizeByRule("geese") == "goose");
  CHECK(SingularizeByRule("pangolin") == "pangolin");
  CHECK(SingularizeByRule("butterflies") == "butterfly");
  CHECK(SingularizeByRule("wolves") == "wolf");
  CHECK(SingularizeByRule("ostriches") == "ostrich");
  CHECK(SingularizeByRule("rhinoceroses") == "rhinoceros");
  CHECK(SingularizeByRule("rhinoceros") == "rhinoceros");
  CHECK(SingularizeByRule("species") == "species");
  CHECK(SingularizeByRule("sea turtles") == "sea turtle");
  CHECK(SingularizeByRule("horses") == "horse");
  CHECK(SingularizeByRule("tortoises") == "tortoise");
  CHECK(SingularizeByRule("houses") == "house");
  CHECK(SingularizeByRule("emus") == "emu");
  CHECK(SingularizeByRule("okapis") == "okapi");
  CHECK(SingularizeByRule("walrus") == "walrus");
  CHECK(SingularizeByRule("walruses") == "walrus");
  CHECK(SingularizeByRule("ibises") == "ibis");
  CHECK(SingularizeByRule("analysis") == "analysis");
}

TEST_CASE("lexicon singularize prefers recorded canonicals") {
  const Lexicon lex = Lexicon::FromEntries(
      {{"tusk", Label::kProduct, "", 1}, {"Asian Elephant", Label::kAnimal, "", 2}});
  CHECK(lex.Singularize("tusks") == "tusk");
  CHECK(lex.Singularize("Asian Elephants") == "asian elephant");
  CHECK(lex.Singularize("geese") == "goose");
  CHECK(lex.Singularize("pangolin") == "pangolin");
}

TEST_CASE("load lexicon with plural expansion") {
  const Lexicon lex = ParseLexicon(
      "surface,label,canonical\nelephant,ANIMAL,\nivory,PRODUCT,\nGabon,COUNTRY,\n", "t.csv");
  // elephant gains a plural; ivory is a mass noun; countries stay as written.
  CHECK(lex.size() == 4);
  for (const char *s : {"elephant", "elephants", "ivory", "gabon"}) {
    INFO(s);
    REQUIRE(lex.Find(s) != nullptr);
  }
  CHECK(lex.Find("elephants")->canonical == "elephant");
  CHECK(lex.Find("elephants")->label == Label::kAnimal);
  CHECK(lex.Find("GABON")->canonical == "gabon");
  CHECK(lex.Find("gabons") == nullptr);
}

TEST_CASE("lexicon validation") {
  try {
    ParseLexicon("surface,label,canonical\ntusk,PRODUCT,\n# note\ntusk,ANIMAL,\n", "dup.csv");
    FAIL("expected a validation error");
  } catch (const ValidationError &e) {
    const std::string msg = e.what();
    CHECK(msg.find("dup.csv:2") != std::string::npos);
    CHECK(msg.find("dup.csv:4") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseLexicon("surface,label,canonical\nlion,MAMMAL,\n", "x"),
                  ValidationError);
  CHECK_THROWS_AS(ParseLexicon("surface,label\nlion,ANIMAL\n", "x"), ValidationError);
  CHECK_THROWS_AS(ParseLexicon("surface,label,canonical\n,ANIMAL,\n", "x"),
                  ValidationError);
  CHECK_THROWS_AS(ParseLexicon("surface,label,canonical\nLion,ANIMAL,Lion\n", "x"),
                  ValidationError);
  // The same surface with the same sense twice is not a conflict.
  CHECK(ParseLexicon("surface,label,canonical\nlion,ANIMAL,\nLion,ANIMAL,lion\n", "x")
            .size() == 2);
  CHECK(ParseLexicon("", "empty.csv").empty());
  CHECK(ParseLexicon("surface,label,canonical\n", "header.csv").empty());
  CHECK_THROWS_AS(LoadLexicon("/nonexistent/lexicon.csv"), Error);
}

TEST_CASE("merge detects cross-file conflicts") {
  const Lexicon a = ParseLexicon("surface,label,canonical\nturkey,ANIMAL,\n", "animals.csv");
  const Lexicon b = ParseLexicon("surface,label,canonical\nTurkey,COUNTRY,\n", "countries.csv");
  CHECK_THROWS_AS(Lexicon::Merge({a, b}), ValidationError);
  const Lexicon c = ParseLexicon("surface,label,canonical\nGabon,COUNTRY,\n", "countries.csv");
  CHECK(Lexicon::Merge({a, c}).size() == a.size() + c.size());
}

TEST_CASE("shipped lexicons") {
  std::vector<Lexicon> parts;
  for (const char *path : kShipped) {
    INFO(path);
    const std::string text = Slurp(path);
    const Lexicon lex = ParseLexicon(text, path);
    const auto declared = DeclaredEntryCount(text);
    REQUIRE(declared.has_value());
    CHECK(*declared == lex.entries().size());
    parts.push_back(lex);
  }
  const Lexicon merged = Lexicon::Merge(parts);
  CHECK(merged.size() > 500);

  // The nine product terms.
  std::vector<std::string> products;
  for (const auto &e : parts[1].entries()) products.push_back(e.surface);
  CHECK(products == std::vector<std::string>{"ivory", "tusk", "skin", "scale", "horn",
                                             "bone", "tooth", "claw", "meat"});

  // Nine core countries are all present.
  for (const char *c : {"gabon", "cameroon", "congo", "togo", "benin", "senegal", "uganda",
                        "guinea", "côte d'ivoire"}) {
    INFO(c);
    REQUIRE(merged.Find(c) != nullptr);
    CHECK(merged.Find(c)->label == Label::kCountry);
  }
  CHECK(merged.Find("sea turtle") != nullptr);
  CHECK(merged.Find("african elephant") != nullptr);
}

TEST_CASE("round trip over shipped countable canonicals") {
  size_t checked = 0, countable = 0;
  for (const char *path : {kShipped[0], kShipped[1]}) {
    const Lexicon lex = LoadLexicon(path);
    for (const auto &e : lex.entries()) {
      const std::string c = e.canonical;
      ++checked;
      const std::string plural = Pluralize(c);
      if (plural != c) ++countable;
      INFO(c, " -> ", plural);
      // Both the rule cascade alone and the lexicon lookup invert pluralize.
      CHECK(SingularizeByRule(plural) == c);
      CHECK(lex.Singularize(plural) == c);
      REQUIRE(lex.Find(plural) != nullptr);
      CHECK(lex.Find(plural)->canonical == c);
    }
  }
  CHECK(checked == 265);
  CHECK(countable > 200);
}

TEST_CASE("loading is deterministic") {
  const std::string text = Slurp(kShipped[0]);
  const Lexicon a = ParseLexicon(text, "a");
  const Lexicon b = ParseLexicon(text, "a");
  CHECK(a.version() == b.version());
  CHECK(a.senses() == b.senses());
  const Lexicon c = ParseLexicon(text + "quokka,ANIMAL,\n", "a");
  CHECK(a.version() != c.version());
}
