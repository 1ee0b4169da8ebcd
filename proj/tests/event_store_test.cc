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

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "wildlife/errors.h"
#include "wildlife/event_store.h"

namespace fs = std::filesystem;
using namespace wildlife;

namespace {

TraffickingEvent Ev(const std::string &report, int year, int month,
                    std::optional<std::string> country, std::optional<std::string> species,
                    std::optional<int64_t> arrests = std::nullopt) {
  TraffickingEvent e;
  e.report_id = report;
  e.year = year;
  e.month = month;
  e.country = std::move(country);
  e.species = std::move(species);
  if (arrests) e.arrest_count = ArrestCount{*arrests};
  return e;
}

ReportInfo Info(const std::string &id, int year, int month) {
  return {id, year, month, id + ".txt"};
}

// Events with weights limited to six decimals, which is what the CSV keeps.
std::vector<TraffickingEvent> RandomEvents(std::mt19937 &rng, std::vector<ReportInfo> *reports) {
  const char *const countries[] = {"gabon", "togo", "côte d'ivoire", "dr congo"};
  const char *const species[] = {"elephant", "grey parrot", "sea turtle", "leopard",
                                 "lion, \"king\""};
  const char *const products[] = {"ivory", "tusk", "scale", "skin"};
  std::uniform_int_distribution<int> coin(0, 1);
  const int n_reports = std::uniform_int_distribution<int>(1, 4)(rng);
  std::vector<TraffickingEvent> out;
  reports->clear();
  for (int r = 0; r < n_reports; ++r) {
    const int year = std::uniform_int_distribution<int>(2015, 2023)(rng);
    const int month = std::uniform_int_distribution<int>(1, 12)(rng);
    char id[32];
    std::snprintf(id, sizeof(id), "src%d-%04d-%02d", r, year, month);
    reports->push_back(Info(id, year, month));
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < n; ++i) {
      TraffickingEvent e;
      e.report_id = id;
      e.year = year;
      e.month = month;
      e.sentence_index = i;
      if (coin(rng)) e.country = countries[rng() % 4];
      if (coin(rng)) e.species = species[rng() % 5];
      if (coin(rng)) e.product = products[rng() % 4];
      if (coin(rng)) e.quantity = Quantity{std::uniform_int_distribution<int64_t>(1, 99999)(rng)};
      if (coin(rng)) {
        const double kg =
            static_cast<double>(std::uniform_int_distribution<int64_t>(1, 5'000'000'000)(rng)) /
            1e6;
        e.weight = Weight{kg, kg, "kg"};
      }
      if (coin(rng)) e.arrest_count = ArrestCount{std::uniform_int_distribution<int64_t>(0, 40)(rng)};
      out.push_back(e);
    }
  }
  return out;
}

void RequireSameFields(const TraffickingEvent &a, const TraffickingEvent &b) {
  REQUIRE(a.report_id == b.report_id);
  REQUIRE(a.year == b.year);
  REQUIRE(a.month == b.month);
  REQUIRE(a.country == b.country);
  REQUIRE(a.species == b.species);
  REQUIRE(a.product == b.product);
  REQUIRE(a.quantity == b.quantity);
  REQUIRE(a.arrest_count == b.arrest_count);
  REQUIRE(a.weight.has_value() == b.weight.has_value());
  if (a.weight) REQUIRE(std::abs(a.weight->value_kg - b.weight->value_kg) <= 1e-9);
}

}  // namespace

TEST_CASE("ingest") {
  EventStore store(":memory:");
  const auto r = Info("eagle-2021-04", 2021, 4);
  std::vector<TraffickingEvent> events = {Ev(r.report_id, 2021, 4, "gabon", "elephant", 2),
                                          Ev(r.report_id, 2021, 4, "gabon", "pangolin")};
  CHECK(store.Ingest(events, {r}) == 2);
  CHECK(store.EventCount() == 2);
  CHECK(store.Ingest(events, {r}) == 2);
  CHECK(store.EventCount() == 2);
  for (int i = 0; i < 3; ++i) store.Ingest(events, {r});
  CHECK(store.Events().size() == 2);

  // Re-ingesting a report with no events clears it.
  store.Ingest({}, {r});
  CHECK(store.EventCount() == 0);

  CHECK_THROWS_AS(store.Ingest({Ev("unknown-2020-01", 2020, 1, {}, "lion")}), SchemaError);
  CHECK(store.EventCount() == 0);
}

TEST_CASE("replace only touches affected reports") {
  EventStore store(":memory:");
  const auto a = Info("a-2020-01", 2020, 1), b = Info("b-2020-02", 2020, 2);
  store.Ingest({Ev(a.report_id, 2020, 1, {}, "lion"), Ev(b.report_id, 2020, 2, {}, "lion")},
               {a, b});
  store.Ingest({Ev(a.report_id, 2020, 1, {}, "leopard")}, {a});
  const auto events = store.Events();
  REQUIRE(events.size() == 2);
  CHECK(events[0].species == std::optional<std::string>("leopard"));
  CHECK(events[1].report_id == "b-2020-02");
  CHECK(store.Reports().size() == 2);
}

TEST_CASE("store file persists") {
  const fs::path path = fs::temp_directory_path() / "wildlife_store_test.db";
  fs::remove(path);
  const auto r = Info("x-2020-03", 2020, 3);
  {
    EventStore store(path);
    store.Ingest({Ev(r.report_id, 2020, 3, "togo", "lion", 1)}, {r});
  }
  EventStore reopened(path);
  CHECK(reopened.EventCount() == 1);
  fs::remove(path);
}

TEST_CASE("export") {
  EventStore store(":memory:");
  CHECK(store.ExportCsvText() ==
        "report_id,year,month,country,species,product,quantity,weight_kg,arrest_count\n");

  const auto r = Info("eagle-2021-04", 2021, 4);
  auto e1 = Ev(r.report_id, 2021, 4, "gabon", "elephant", 3);
  e1.product = "tusk";
  e1.quantity = Quantity{2};
  e1.weight = Weight{12.5, 12.5, "kg"};
  auto e2 = Ev(r.report_id, 2021, 4, {}, {});
  e2.product = "scale";
  e2.weight = Weight{0.1234567, 0.1234567, "kg"};
  e2.sentence_index = 1;
  store.Ingest({e1, e2}, {r});
  CHECK(store.ExportCsvText() ==
        "report_id,year,month,country,species,product,quantity,weight_kg,arrest_count\n"
        "eagle-2021-04,2021,4,gabon,elephant,tusk,2,12.5,3\n"
        "eagle-2021-04,2021,4,,,scale,,0.123457,\n");
}

TEST_CASE("import") {
  const std::string header =
      "report_id,year,month,country,species,product,quantity,weight_kg,arrest_count\n";
  CHECK(ParseEventsCsv(header).empty());
  CHECK_THROWS_AS(ParseEventsCsv("report_id,year\n"), ParseError);
  CHECK_THROWS_AS(ParseEventsCsv(header + "r-2020-01,2020,0,,lion,,,,\n"), ParseError);
  CHECK_THROWS_AS(ParseEventsCsv(header + "r-2020-01,2020,13,,lion,,,,\n"), ParseError);
  CHECK_THROWS_AS(ParseEventsCsv(header + "r-2020-01,2020,1,,lion,,x,,\n"), ParseError);
  CHECK_THROWS_AS(ParseEventsCsv(header + "r-2020-01,2020,1,,lion,,,-2,\n"), ParseError);
  CHECK_THROWS_AS(ParseEventsCsv(header + "r-2020-01,2020,1,,lion,,,\n"), ParseError);

  const auto events = ParseEventsCsv(header +
                                     "r-2020-01,2020,1,gabon,lion,,3,,\n"
                                     "r-2020-01,2020,1,,,\"bone, horn\",,1.5,0\n");
  REQUIRE(events.size() == 2);
  CHECK(events[0].country == std::optional<std::string>("gabon"));
  CHECK_FALSE(events[0].product.has_value());
  CHECK(events[0].quantity == Quantity{3});
  CHECK(events[1].product == std::optional<std::string>("bone, horn"));
  CHECK(events[1].weight->value_kg == 1.5);
  CHECK(events[1].arrest_count == ArrestCount{0});
  CHECK(events[1].sentence_index == 1);
}

TEST_CASE("csv round trip on random event sets") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 1000; ++round) {
    std::vector<ReportInfo> reports;
    const auto events = RandomEvents(rng, &reports);
    EventStore store(":memory:");
    store.Ingest(events, reports);
    const std::string csv = store.ExportCsvText();
    const auto imported = ParseEventsCsv(csv);
    const auto stored = store.Events();
    REQUIRE(imported.size() == events.size());
    REQUIRE(stored.size() == events.size());
    for (size_t i = 0; i < stored.size(); ++i) RequireSameFields(stored[i], imported[i]);

    // And importing into a fresh store exports the same bytes.
    EventStore again(":memory:");
    again.Ingest(imported, reports);
    REQUIRE(again.ExportCsvText() == csv);
    REQUIRE(again.Version() == store.Version());
  }
}

TEST_CASE("summarize") {
  EventStore store(":memory:");
  CHECK(store.Summarize() == SummaryStats{});

  const auto a = Info("a-2021-01", 2021, 1), b = Info("b-2020-06", 2020, 6);
  store.Ingest({Ev(a.report_id, 2021, 1, "gabon", "leopard", 3),
                Ev(a.report_id, 2021, 1, "gabon", "elephant", 1),
                Ev(b.report_id, 2020, 6, "togo", "leopard")},
               {a, b});
  const SummaryStats s = store.Summarize();
  CHECK(s.total_events == 3);
  CHECK(s.total_arrests == 4);
  CHECK(s.distinct_species == 2);
  CHECK(s.per_country == std::map<std::string, int64_t>{{"gabon", 2}, {"togo", 1}});
  CHECK(s.per_month.at({2021, 1}) == 2);
  CHECK(s.top_species ==
        std::vector<std::pair<std::string, int64_t>>{{"leopard", 2}, {"elephant", 1}});

  SummaryFilter only_2021;
  only_2021.year_from = 2021;
  only_2021.year_to = 2021;
  const SummaryStats f = store.Summarize(only_2021);
  CHECK(f.total_events == 2);
  CHECK(f.per_country == std::map<std::string, int64_t>{{"gabon", 2}});

  SummaryFilter togo;
  togo.country = "togo";
  CHECK(store.Summarize(togo).total_events == 1);
}

TEST_CASE("summarize agrees with a naive scan") {
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    std::vector<ReportInfo> reports;
    const auto events = RandomEvents(rng, &reports);
    EventStore store(":memory:");
    store.Ingest(events, reports);
    REQUIRE(store.Summarize() == oracle::Summarize(events));
    SummaryFilter filter;
    filter.year_from = 2017;
    filter.year_to = 2020;
    if (round % 2) filter.country = "gabon";
    REQUIRE(store.Summarize(filter) == oracle::Summarize(events, filter));
  }
}
