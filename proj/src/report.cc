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

#include "wildlife/report.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "wildlife/errors.h"

namespace wildlife {

namespace {

std::string MonthKey(const std::pair<int, int> &ym) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", ym.first, ym.second);
  return buf;
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string Escape(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

constexpr const char *kStyle = R"css(
body { font-family: Helvetica, Arial, sans-serif; margin: 2em; color: #222; }
h1 { font-size: 1.6em; }
.counters { display: flex; gap: 2em; margin-bottom: 2em; }
.counter { background: #f3f1ea; border-radius: 6px; padding: 1em 1.5em; }
.counter .value { display: block; font-size: 2.2em; font-weight: bold; }
.counter .label { color: #666; }
svg text { font-size: 11px; fill: #222; }
.bubble circle { fill: #8c6d46; fill-opacity: 0.75; }
.bar rect { fill: #4f7a5a; }
.month rect { fill: #b5651d; }
footer { margin-top: 2em; color: #888; font-size: 0.8em; }
)css";

void Counter(std::ostringstream &out, const char *metric, const char *label,
             int64_t value) {
  out << "<div class=\"counter\" data-metric=\"" << metric << "\" data-value=\""
      << value << "\"><span class=\"value\">" << value << "</span><span class=\"label\">"
      << label << "</span></div>\n";
}

void BubbleChart(std::ostringstream &out, const SummaryStats &stats) {
  constexpr double kWidth = 760;
  constexpr double kPad = 12;
  int64_t max_count = 0;
  for (const auto &[species, n] : stats.top_species) max_count = std::max(max_count, n);

  struct Placed {
    std::string species;
    int64_t count;
    double r, cx, cy;
  };
  std::vector<Placed> placed;
  double x = kPad, row_y = kPad, row_h = 0;
  for (const auto &[species, n] : stats.top_species) {
    const double r = kMaxBubbleRadius * std::sqrt(static_cast<double>(n) / max_count);
    if (x + 2 * r + kPad > kWidth && x > kPad) {
      row_y += row_h + kPad + 14;
      x = kPad;
      row_h = 0;
    }
    placed.push_back({species, n, r, x + r, row_y + r});
    x += 2 * r + kPad;
    row_h = std::max(row_h, 2 * r);
  }
  const double height = placed.empty() ? 40 : row_y + row_h + kPad + 14;

  out << "<svg class=\"bubbles\" width=\"" << kWidth << "\" height=\"" << Fixed(height)
      << "\" viewBox=\"0 0 " << kWidth << ' ' << Fixed(height) << "\" role=\"img\">\n";
  for (const Placed &p : placed) {
    const std::string name = Escape(p.species);
    out << "<g class=\"bubble\" data-species=\"" << name << "\" data-count=\"" << p.count
        << "\" data-radius=\"" << Fixed(p.r) << "\"><circle cx=\"" << Fixed(p.cx)
        << "\" cy=\"" << Fixed(p.cy) << "\" r=\"" << Fixed(p.r) << "\"></circle>"
        << "<title>" << name << ": " << p.count << "</title><text x=\"" << Fixed(p.cx)
        << "\" y=\"" << Fixed(p.cy + p.r + 12) << "\" text-anchor=\"middle\">" << name
        << " (" << p.count << ")</text></g>\n";
  }
  out << "</svg>\n";
}

void CountryChart(std::ostringstream &out, const SummaryStats &stats) {
  std::vector<std::pair<std::string, int64_t>> rows(stats.per_country.begin(),
                                                    stats.per_country.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  int64_t max_count = 1;
  for (const auto &r : rows) max_count = std::max(max_count, r.second);

  constexpr double kBarMax = 480, kRow = 24, kLabel = 160;
  const double height = std::max(kRow, kRow * static_cast<double>(rows.size()));
  out << "<svg class=\"countries\" width=\"720\" height=\"" << Fixed(height)
      << "\" viewBox=\"0 0 720 " << Fixed(height) << "\" role=\"img\">\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto &[country, n] = rows[i];
    const double y = kRow * static_cast<double>(i);
    const double w = kBarMax * static_cast<double>(n) / static_cast<double>(max_count);
    const std::string name = Escape(country);
    out << "<g class=\"bar\" data-country=\"" << name << "\" data-count=\"" << n
        << "\" data-rank=\"" << i << "\"><text x=\"0\" y=\"" << Fixed(y + 16) << "\">"
        << name << "</text><rect x=\"" << kLabel << "\" y=\"" << Fixed(y + 4)
        << "\" width=\"" << Fixed(w) << "\" height=\"16\"></rect><text x=\""
        << Fixed(kLabel + w + 6) << "\" y=\"" << Fixed(y + 16) << "\">" << n
        << "</text></g>\n";
  }
  out << "</svg>\n";
}

void MonthChart(std::ostringstream &out, const SummaryStats &stats) {
  int64_t max_count = 1;
  for (const auto &[ym, n] : stats.per_month) max_count = std::max(max_count, n);
  constexpr double kPlotH = 160, kBarW = 14, kGap = 4, kBase = 180;
  const double width =
      std::max(200.0, (kBarW + kGap) * static_cast<double>(stats.per_month.size()) + 20);
  out << "<svg class=\"months\" width=\"" << Fixed(width) << "\" height=\"220\" viewBox=\"0 0 "
      << Fixed(width) << " 220\" role=\"img\">\n";
  size_t i = 0;
  for (const auto &[ym, n] : stats.per_month) {
    const double h = kPlotH * static_cast<double>(n) / static_cast<double>(max_count);
    const double x = 10 + (kBarW + kGap) * static_cast<double>(i++);
    const std::string key = MonthKey(ym);
    out << "<g class=\"month\" data-month=\"" << key << "\" data-count=\"" << n
        << "\"><rect x=\"" << Fixed(x) << "\" y=\"" << Fixed(kBase - h) << "\" width=\""
        << kBarW << "\" height=\"" << Fixed(h) << "\"></rect><title>" << key << ": " << n
        << "</title></g>\n";
  }
  out << "</svg>\n";
}

std::string NowUtc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string EmitJson(const SummaryStats &stats) {
  nlohmann::ordered_json doc;
  doc["total_events"] = stats.total_events;
  doc["total_arrests"] = stats.total_arrests;
  doc["distinct_species"] = stats.distinct_species;
  doc["per_country"] = nlohmann::ordered_json::object();
  for (const auto &[country, n] : stats.per_country) doc["per_country"][country] = n;
  doc["per_month"] = nlohmann::ordered_json::object();
  for (const auto &[ym, n] : stats.per_month) doc["per_month"][MonthKey(ym)] = n;
  doc["top_species"] = nlohmann::ordered_json::array();
  for (const auto &[species, n] : stats.top_species) {
    doc["top_species"].push_back({{"species", species}, {"events", n}});
  }
  return doc.dump(2) + "\n";
}

std::string EmitHtml(const SummaryStats &stats, const std::string &store_version,
                     const std::string &generated_at) {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Wildlife trafficking events</title>\n<style>" << kStyle
      << "</style>\n</head>\n<body>\n<h1>Wildlife trafficking events</h1>\n"
      << "<section class=\"counters\">\n";
  Counter(out, "total_events", "events", stats.total_events);
  Counter(out, "total_arrests", "arrests", stats.total_arrests);
  Counter(out, "distinct_species", "species", stats.distinct_species);
  out << "</section>\n<section>\n<h2>Species by number of events</h2>\n";
  BubbleChart(out, stats);
  out << "</section>\n<section>\n<h2>Events per country</h2>\n";
  CountryChart(out, stats);
  out << "</section>\n<section>\n<h2>Events per month</h2>\n";
  MonthChart(out, stats);
  out << "</section>\n";
  if (!store_version.empty() || !generated_at.empty()) {
    out << "<footer data-store-version=\"" << Escape(store_version)
        << "\" data-generated-at=\"" << Escape(generated_at) << "\">store "
        << Escape(store_version) << ", generated " << Escape(generated_at) << "</footer>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

RenderedReport Render(const EventStore &store, const SummaryFilter &filter) {
  RenderedReport r;
  const SummaryStats stats = store.Summarize(filter);
  r.store_version = store.Version();
  r.generated_at = NowUtc();
  r.json_text = EmitJson(stats);
  r.html_text = EmitHtml(stats, r.store_version, r.generated_at);
  return r;
}

void WriteReport(const RenderedReport &report, const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  for (const auto &[name, text] : {std::pair{"summary.json", &report.json_text},
                                   std::pair{"dashboard.html", &report.html_text}}) {
    std::ofstream out(dir / name, std::ios::binary);
    out << *text;
    if (!out) throw Error("cannot write " + (dir / name).string());
  }
}

}  // namespace wildlife
