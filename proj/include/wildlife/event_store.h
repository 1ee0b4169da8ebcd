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

#ifndef WILDLIFE_EVENT_STORE_H_
#define WILDLIFE_EVENT_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wildlife/event.h"

struct sqlite3;

namespace wildlife {

inline constexpr std::string_view kEventCsvHeader =
    "report_id,year,month,country,species,product,quantity,weight_kg,arrest_count";

struct ReportInfo {
  std::string report_id;
  int year = 0;
  int month = 0;
  std::string source_path;
};

struct SummaryFilter {
  std::optional<std::string> country;
  std::optional<int> year_from;  // inclusive
  std::optional<int> year_to;    // inclusive
};

struct SummaryStats {
  int64_t total_events = 0;
  int64_t total_arrests = 0;  // absent counts as 0
  int64_t distinct_species = 0;
  std::map<std::string, int64_t> per_country;
  std::map<std::pair<int, int>, int64_t> per_month;  // (year, month)
  // Descending by count, ties alphabetical.
  std::vector<std::pair<std::string, int64_t>> top_species;

  bool operator==(const SummaryStats &) const = default;
};

// Relational store with two tables, reports and events. Backed by SQLite;
// ":memory:" opens a private in-memory database. One writer at a time.
class EventStore {
 public:
  // Throws StoreError if the database cannot be opened or initialized.
  explicit EventStore(const std::filesystem::path &path);
  ~EventStore();
  EventStore(EventStore &&) noexcept;
  EventStore &operator=(EventStore &&) noexcept;
  EventStore(const EventStore &) = delete;
  EventStore &operator=(const EventStore &) = delete;

  // Inserts or updates a report row.
  void RegisterReport(const ReportInfo &report);

  // Registers `reports`, deletes every stored event of those reports and of
  // the report ids in `events`, then inserts `events`; all in one transaction. Returns the
  // number inserted. Throws SchemaError when an event references an unknown
  // report.
  size_t Ingest(const std::vector<TraffickingEvent> &events,
                const std::vector<ReportInfo> &reports = {});

  // Events ordered by (report_id, sentence_index, event_id).
  std::vector<TraffickingEvent> Events() const;
  std::vector<ReportInfo> Reports() const;
  int64_t EventCount() const;

  SummaryStats Summarize(const SummaryFilter &filter = {}) const;

  void ExportCsv(std::ostream &out) const;
  void ExportCsv(const std::filesystem::path &path) const;
  std::string ExportCsvText() const;

  // Content hash of the exported event rows.
  std::string Version() const;

 private:
  void Exec(const char *sql) const;

  sqlite3 *db_ = nullptr;
};

void WriteEventsCsv(const std::vector<TraffickingEvent> &events, std::ostream &out);

// Parses event CSV text. Throws ParseError on a header mismatch, bad
// numbers, or a month outside 1-12. sentence_index is the row's position
// among rows of the same report.
std::vector<TraffickingEvent> ParseEventsCsv(std::string_view text);
std::vector<TraffickingEvent> ImportCsv(const std::filesystem::path &path);

}  // namespace wildlife

#endif  // WILDLIFE_EVENT_STORE_H_
