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

#ifndef WILDLIFE_REPORT_H_
#define WILDLIFE_REPORT_H_

#include <filesystem>
#include <string>

#include "wildlife/event_store.h"

namespace wildlife {

struct RenderedReport {
  std::string json_text;
  std::string html_text;
  std::string generated_at;   // ISO-8601 UTC
  std::string store_version;  // EventStore::Version()
};

// Radius of the largest species bubble in the dashboard, in SVG units.
inline constexpr double kMaxBubbleRadius = 60.0;

// Deterministic JSON: fixed key order, per_month keyed "YYYY-MM".
std::string EmitJson(const SummaryStats &stats);

// Self-contained HTML page: headline counters, species bubble chart (radius
// proportional to sqrt(count)), per-country bars sorted by count, per-month
// bars. Every number is also written to a data-* attribute. `store_version`
// and `generated_at` only appear in the footer when non-empty.
std::string EmitHtml(const SummaryStats &stats, const std::string &store_version = "",
                     const std::string &generated_at = "");

RenderedReport Render(const EventStore &store, const SummaryFilter &filter = {});

// Writes summary.json and dashboard.html into `dir` (created if missing).
void WriteReport(const RenderedReport &report, const std::filesystem::path &dir);

}  // namespace wildlife

#endif  // WILDLIFE_REPORT_H_
