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

// Independent reference implementations used as test oracles. They are
// deliberately slow and simple and share no code with the library.

#ifndef WILDLIFE_TESTS_ORACLES_H_
#define WILDLIFE_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wildlife/event.h"
#include "wildlife/event_store.h"

namespace oracle {

// Tries every phrase at every position, then keeps matches in order of
// (start asc, length desc), dropping any that overlap one already kept.
inline std::vector<std::pair<size_t, size_t>> LeftmostLongest(
    const std::vector<std::string> &tokens,
    const std::vector<std::vector<std::string>> &phrases) {
  std::vector<std::pair<size_t, size_t>> candidates;
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (const auto &phrase : phrases) {
      if (phrase.empty() || i + phrase.size() > tokens.size()) continue;
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + i)) {
        candidates.emplace_back(i, i + phrase.size());
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<std::pair<size_t, size_t>> kept;
  for (const auto &c : candidates) {
    if (!kept.empty() && c.first < kept.back().second) continue;
    kept.push_back(c);
  }
  return kept;
}

inline std::string SpellBelow1000(int n, bool hyphen) {
  static const char *const kOnes[] = {"zero",    "one",     "two",       "three",
                                      "four",    "five",    "six",       "seven",
                                      "eight",   "nine",    "ten",       "eleven",
                                      "twelve",  "thirteen", "fourteen", "fifteen",
                                      "sixteen", "seventeen", "eighteen", "nineteen"};
  static const char *const kTens[] = {"",      "",      "twenty",  "thirty", "forty",
                                      "fifty", "sixty", "seventy", "eighty", "ninety"};
  std::string out;
  if (n >= 100) {
    out = std::string(kOnes[n / 100]) + " hundred";
    n %= 100;
    if (n == 0) return out;
    out += " ";
  }
  if (n < 20) return out + kOnes[n];
  out += kTens[n / 10];
  if (n % 10) out += std::string(hyphen ? "-" : " ") + kOnes[n % 10];
  return out;
}

// English spelling of 0..999,999 ("three thousand forty-two").
inline std::string Spell(int64_t n, bool hyphen = true) {
  if (n < 1000) return SpellBelow1000(static_cast<int>(n), hyphen);
  std::string out = SpellBelow1000(static_cast<int>(n / 1000), hyphen) + " thousand";
  if (n % 1000) out += " " + SpellBelow1000(static_cast<int>(n % 1000), hyphen);
  return out;
}

// Summary statistics by a single pass over the rows.
inline wildlife::SummaryStats Summarize(const std::vector<wildlife::TraffickingEvent> &events,
                                        const wildlife::SummaryFilter &filter = {}) {
  wildlife::SummaryStats s;
  std::map<std::string, int64_t> species;
  for (const auto &e : events) {
    if (filter.country && e.country != filter.country) continue;
    if (filter.year_from && e.year < *filter.year_from) continue;
    if (filter.year_to && e.year > *filter.year_to) continue;
    ++s.total_events;
    if (e.arrest_count) s.total_arrests += e.arrest_count->value;
    if (e.country) ++s.per_country[*e.country];
    ++s.per_month[{e.year, e.month}];
    if (e.species) ++species[*e.species];
  }
  s.distinct_species = static_cast<int64_t>(species.size());
  for (const auto &[name, n] : species) s.top_species.emplace_back(name, n);
  std::sort(s.top_species.begin(), s.top_species.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return s;
}

}  // namespace oracle

#endif  // WILDLIFE_TESTS_ORACLES_H_
