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

#include "wildlife/event_store.h"

#include <sqlite3.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "wildlife/csv.h"
#include "wildlife/errors.h"
#include "wildlife/text.h"

namespace wildlife {

namespace {

constexpr const char *kSchema = R"sql(
CREATE TABLE IF NOT EXISTS reports (
  report_id   TEXT PRIMARY KEY,
  year        INTEGER NOT NULL,
  month       INTEGER NOT NULL CHECK (month BETWEEN 1 AND 12),
  source_path TEXT NOT NULL DEFAULT ''
);
CREATE TABLE IF NOT EXISTS events (
  event_id       TEXT PRIMARY KEY,
  report_id      TEXT NOT NULL REFERENCES reports(report_id),
  sentence_index INTEGER NOT NULL,
  country        TEXT,
  species        TEXT,
  product        TEXT,
  quantity       INTEGER,
  weight_kg      REAL,
  arrest_count   INTEGER
);
CREATE INDEX IF NOT EXISTS events_by_report ON events(report_id);
)sql";

// Thin RAII wrapper over a prepared statement.
class Statement {
 public:
  Statement(sqlite3 *db, const char *sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw StoreError(std::string("prepare failed: ") + sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement &) = delete;
  Statement &operator=(const Statement &) = delete;

  void Bind(int i, const std::string &v) {
    sqlite3_bind_text(stmt_, i, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
  }
  void Bind(int i, int64_t v) { sqlite3_bind_int64(stmt_, i, v); }
  void Bind(int i, double v) { sqlite3_bind_double(stmt_, i, v); }
  void BindNull(int i) { sqlite3_bind_null(stmt_, i); }
  template <typename T>
  void BindOptional(int i, const std::optional<T> &v) {
    if (v) {
      Bind(i, *v);
    } else {
      BindNull(i);
    }
  }

  // Returns true while rows are available.
  bool Step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    const std::string msg = sqlite3_errmsg(db_);
    if ((rc & 0xFF) == SQLITE_CONSTRAINT) throw SchemaError("constraint violation: " + msg);
    throw StoreError("statement failed: " + msg);
  }
  void Reset() {
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
  }

  bool IsNull(int col) const { return sqlite3_column_type(stmt_, col) == SQLITE_NULL; }
  int64_t Int(int col) const { return sqlite3_column_int64(stmt_, col); }
  double Real(int col) const { return sqlite3_column_double(stmt_, col); }
  std::string Text(int col) const {
    const auto *p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char *>(p)) : std::string();
  }
  std::optional<std::string> OptText(int col) const {
    if (IsNull(col)) return std::nullopt;
    return Text(col);
  }

 private:
  sqlite3 *db_;
  sqlite3_stmt *stmt_ = nullptr;
};

std::string EventId(const std::string &report_id, size_t seq) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06zu", seq);
  return report_id + "/" + buf;
}

template <typename T>
T ParseInt(const std::string &s, const std::string &what, size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line) + ": " + what + " '" + s +
                     "' is not an integer");
  }
  return value;
}

double ParseReal(const std::string &s, const std::string &what, size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line) + ": " + what + " '" + s +
                     "' is not a number");
  }
  return value;
}

std::string SummaryWhere(const SummaryFilter &f) {
  std::string where = " WHERE 1=1";
  if (f.country) where += " AND e.country = ?1";
  if (f.year_from) where += " AND r.year >= ?2";
  if (f.year_to) where += " AND r.year <= ?3";
  return where;
}

void BindFilter(Statement &st, const SummaryFilter &f) {
  if (f.country) st.Bind(1, *f.country);
  if (f.year_from) st.Bind(2, static_cast<int64_t>(*f.year_from));
  if (f.year_to) st.Bind(3, static_cast<int64_t>(*f.year_to));
}

}  // namespace

EventStore::EventStore(const std::filesystem::path &path) {
  const int rc = sqlite3_open_v2(path.string().c_str(), &db_,
                                 SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE, nullptr);
  if (rc != SQLITE_OK) {
    const std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    db_ = nullptr;
    throw StoreError("cannot open store " + path.string() + ": " + msg);
  }
  Exec("PRAGMA foreign_keys = ON;");
  Exec(kSchema);
}

EventStore::~EventStore() { sqlite3_close(db_); }

EventStore::EventStore(EventStore &&other) noexcept : db_(other.db_) {
  other.db_ = nullptr;
}

EventStore &EventStore::operator=(EventStore &&other) noexcept {
  if (this != &other) {
    sqlite3_close(db_);
    db_ = other.db_;
    other.db_ = nullptr;
  }
  return *this;
}

void EventStore::Exec(const char *sql) const {
  char *err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    const std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StoreError("store error: " + msg);
  }
}

void EventStore::RegisterReport(const ReportInfo &report) {
  Statement st(db_,
               "INSERT INTO reports(report_id, year, month, source_path) "
               "VALUES (?1, ?2, ?3, ?4) ON CONFLICT(report_id) DO UPDATE SET "
               "year = excluded.year, month = excluded.month, "
               "source_path = excluded.source_path");
  st.Bind(1, report.report_id);
  st.Bind(2, static_cast<int64_t>(report.year));
  st.Bind(3, static_cast<int64_t>(report.month));
  st.Bind(4, report.source_path);
  st.Step();
}

size_t EventStore::Ingest(const std::vector<TraffickingEvent> &events,
                          const std::vector<ReportInfo> &reports) {
  Exec("BEGIN IMMEDIATE;");
  try {
    for (const ReportInfo &r : reports) RegisterReport(r);

    std::set<std::string> affected;
    for (const auto &e : events) affected.insert(e.report_id);
    for (const ReportInfo &r : reports) affected.insert(r.report_id);
    {
      Statement del(db_, "DELETE FROM events WHERE report_id = ?1");
      for (const auto &id : affected) {
        del.Bind(1, id);
        del.Step();
        del.Reset();
      }
    }

    Statement ins(db_,
                  "INSERT INTO events(event_id, report_id, sentence_index, country, "
                  "species, product, quantity, weight_kg, arrest_count) "
                  "VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8, ?9)");
    std::map<std::string, size_t> seq;
    for (const auto &e : events) {
      ins.Bind(1, EventId(e.report_id, seq[e.report_id]++));
      ins.Bind(2, e.report_id);
      ins.Bind(3, static_cast<int64_t>(e.sentence_index));
      ins.BindOptional(4, e.country);
      ins.BindOptional(5, e.species);
      ins.BindOptional(6, e.product);
      if (e.quantity) ins.Bind(7, e.quantity->value); else ins.BindNull(7);
      if (e.weight) ins.Bind(8, e.weight->value_kg); else ins.BindNull(8);
      if (e.arrest_count) ins.Bind(9, e.arrest_count->value); else ins.BindNull(9);
      ins.Step();
      ins.Reset();
    }
    Exec("COMMIT;");
  } catch (...) {
    sqlite3_exec(db_, "ROLLBACK;", nullptr, nullptr, nullptr);
    throw;
  }
  return events.size();
}

std::vector<TraffickingEvent> EventStore::Events() const {
  Statement st(db_,
               "SELECT e.report_id, r.year, r.month, e.country, e.species, e.product, "
               "e.quantity, e.weight_kg, e.arrest_count, e.sentence_index "
               "FROM events e JOIN reports r ON r.report_id = e.report_id "
               "ORDER BY e.report_id, e.sentence_index, e.event_id");
  std::vector<TraffickingEvent> out;
  while (st.Step()) {
    TraffickingEvent e;
    e.report_id = st.Text(0);
    e.year = static_cast<int>(st.Int(1));
    e.month = static_cast<int>(st.Int(2));
    e.country = st.OptText(3);
    e.species = st.OptText(4);
    e.product = st.OptText(5);
    if (!st.IsNull(6)) e.quantity = Quantity{st.Int(6)};
    if (!st.IsNull(7)) {
      const double kg = st.Real(7);
      e.weight = Weight{kg, kg, "kg"};
    }
    if (!st.IsNull(8)) e.arrest_count = ArrestCount{st.Int(8)};
    e.sentence_index = static_cast<int>(st.Int(9));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ReportInfo> EventStore::Reports() const {
  Statement st(db_, "SELECT report_id, year, month, source_path FROM reports "
                    "ORDER BY report_id");
  std::vector<ReportInfo> out;
  while (st.Step()) {
    out.push_back({st.Text(0), static_cast<int>(st.Int(1)),
                   static_cast<int>(st.Int(2)), st.Text(3)});
  }
  return out;
}

int64_t EventStore::EventCount() const {
  Statement st(db_, "SELECT COUNT(*) FROM events");
  st.Step();
  return st.Int(0);
}

SummaryStats EventStore::Summarize(const SummaryFilter &filter) const {
  const std::string from =
      " FROM events e JOIN reports r ON r.report_id = e.report_id" + SummaryWhere(filter);
  SummaryStats stats;
  {
    Statement st(db_, ("SELECT COUNT(*), COALESCE(SUM(e.arrest_count), 0), "
                       "COUNT(DISTINCT e.species)" + from).c_str());
    BindFilter(st, filter);
    st.Step();
    stats.total_events = st.Int(0);
    stats.total_arrests = st.Int(1);
    stats.distinct_species = st.Int(2);
  }
  {
    Statement st(db_, ("SELECT e.country, COUNT(*)" + from +
                       " AND e.country IS NOT NULL GROUP BY e.country").c_str());
    BindFilter(st, filter);
    while (st.Step()) stats.per_country[st.Text(0)] = st.Int(1);
  }
  {
    Statement st(db_, ("SELECT r.year, r.month, COUNT(*)" + from +
                       " GROUP BY r.year, r.month").c_str());
    BindFilter(st, filter);
    while (st.Step()) {
      stats.per_month[{static_cast<int>(st.Int(0)), static_cast<int>(st.Int(1))}] =
          st.Int(2);
    }
  }
  {
    Statement st(db_, ("SELECT e.species, COUNT(*) AS n" + from +
                       " AND e.species IS NOT NULL GROUP BY e.species "
                       "ORDER BY n DESC, e.species ASC").c_str());
    BindFilter(st, filter);
    while (st.Step()) stats.top_species.emplace_back(st.Text(0), st.Int(1));
  }
  return stats;
}

void EventStore::ExportCsv(std::ostream &out) const { WriteEventsCsv(Events(), out); }

void EventStore::ExportCsv(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StoreError("cannot write " + path.string());
  ExportCsv(out);
  if (!out) throw StoreError("write failed for " + path.string());
}

std::string EventStore::ExportCsvText() const {
  std::ostringstream out;
  ExportCsv(out);
  return out.str();
}

std::string EventStore::Version() const { return ContentHash(ExportCsvText()); }

void WriteEventsCsv(const std::vector<TraffickingEvent> &events, std::ostream &out) {
  out << kEventCsvHeader << '\n';
  for (const auto &e : events) {
    out << CsvLine({
        e.report_id,
        std::to_string(e.year),
        std::to_string(e.month),
        e.country.value_or(""),
        e.species.value_or(""),
        e.product.value_or(""),
        e.quantity ? std::to_string(e.quantity->value) : "",
        e.weight ? FormatDecimal(e.weight->value_kg, 6) : "",
        e.arrest_count ? std::to_string(e.arrest_count->value) : "",
    });
  }
}

std::vector<TraffickingEvent> ParseEventsCsv(std::string_view text) {
  const std::vector<CsvRecord> records = ReadCsv(text);
  if (records.empty()) throw ParseError("missing header line");
  std::string header;
  for (size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i > 0) header += ',';
    header += records[0].fields[i];
  }
  if (header != kEventCsvHeader) {
    throw ParseError("header must be '" + std::string(kEventCsvHeader) + "', got '" +
                     header + "'");
  }
  std::vector<TraffickingEvent> events;
  std::map<std::string, int> seq;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto &f = records[r].fields;
    const size_t line = records[r].line;
    if (f.size() != 9) {
      throw ParseError("line " + std::to_string(line) + ": expected 9 fields, got " +
                       std::to_string(f.size()));
    }
    TraffickingEvent e;
    e.report_id = f[0];
    if (e.report_id.empty()) {
      throw ParseError("line " + std::to_string(line) + ": empty report_id");
    }
    e.year = ParseInt<int>(f[1], "year", line);
    e.month = ParseInt<int>(f[2], "month", line);
    if (e.month < 1 || e.month > 12) {
      throw ParseError("line " + std::to_string(line) + ": month " + f[2] +
                       " outside 1-12");
    }
    if (!f[3].empty()) e.country = f[3];
    if (!f[4].empty()) e.species = f[4];
    if (!f[5].empty()) e.product = f[5];
    if (!f[6].empty()) {
      const auto q = ParseInt<int64_t>(f[6], "quantity", line);
      if (q < 1) throw ParseError("line " + std::to_string(line) + ": quantity must be >= 1");
      e.quantity = Quantity{q};
    }
    if (!f[7].empty()) {
      const double kg = ParseReal(f[7], "weight_kg", line);
      if (!(kg > 0)) throw ParseError("line " + std::to_string(line) + ": weight must be > 0");
      e.weight = Weight{kg, kg, "kg"};
    }
    if (!f[8].empty()) {
      const auto a = ParseInt<int64_t>(f[8], "arrest_count", line);
      if (a < 0) throw ParseError("line " + std::to_string(line) + ": arrest_count must be >= 0");
      e.arrest_count = ArrestCount{a};
    }
    e.sentence_index = seq[e.report_id]++;
    events.push_back(std::move(e));
  }
  return events;
}

std::vector<TraffickingEvent> ImportCsv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseEventsCsv(buf.str());
}

}  // namespace wildlife
