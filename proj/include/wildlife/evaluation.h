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

#ifndef WILDLIFE_EVALUATION_H_
#define WILDLIFE_EVALUATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wildlife/event.h"

namespace wildlife {

enum class Outcome { kFullyCorrect, kPartiallyCorrect, kUnrelated, kUndetected };

std::string_view OutcomeName(Outcome outcome);

// The six compared fields, in report order.
enum class Field { kArrestCount, kCountry, kProduct, kSpecies, kQuantity, kWeight };
inline constexpr size_t kFieldCount = 6;
std::string_view FieldName(Field field);

inline constexpr double kWeightToleranceKg = 1e-6;

bool FieldAgree(const std::optional<std::string> &a, const std::optional<std::string> &b);
bool FieldAgree(const std::optional<int64_t> &a, const std::optional<int64_t> &b);
// Weights in kilograms; equal within kWeightToleranceKg.
bool FieldAgree(const std::optional<double> &a, const std::optional<double> &b);

// Per-field agreement between two events.
std::array<bool, kFieldCount> CompareFields(const TraffickingEvent &a,
                                            const TraffickingEvent &b);

enum class Eligibility {
  // Species or product agree on a value present on both sides. Two events
  // that carry neither species nor product (arrest-only) are also eligible.
  kWhatTrafficked,
  // Every pair is eligible; only the field score decides.
  kAnyPair,
};

std::optional<Eligibility> ParseEligibility(std::string_view name);

bool Eligible(const TraffickingEvent &predicted, const GoldEvent &gold,
              Eligibility rule = Eligibility::kWhatTrafficked);

struct MatchResult {
  // One of kFullyCorrect, kPartiallyCorrect, kUnrelated per prediction.
  std::vector<Outcome> predicted;
  // Index of the matched gold event per prediction.
  std::vector<std::optional<size_t>> assignment;
  // Per gold event: detected or not.
  std::vector<bool> gold_detected;
  // Field agreement counts over matched pairs.
  std::array<int64_t, kFieldCount> field_agreement{};
};

// Greedy one-to-one matching for a single report: repeatedly take the
// eligible (prediction, gold) pair with the most agreeing fields, ties to the
// earliest prediction then earliest gold. Throws UsageError if the events
// span more than one report_id.
MatchResult MatchEvents(const std::vector<TraffickingEvent> &predicted,
                        const std::vector<GoldEvent> &gold,
                        Eligibility rule = Eligibility::kWhatTrafficked);

struct EvalReport {
  int64_t fully_correct = 0;
  int64_t partially_correct = 0;
  int64_t unrelated = 0;
  int64_t undetected = 0;
  int64_t detected_gold = 0;
  int64_t total_gold = 0;
  int64_t predictions = 0;
  std::array<int64_t, kFieldCount> field_agreement{};

  double DetectionRate() const;

  // "fully=15 partial=36 unrelated=39 undetected=38 total_gold=85"
  std::string SummaryLine() const;
  // Human-readable multi-line report.
  std::string ToText() const;
  // "key: value" lines, one per metric.
  std::string ToKeyValue() const;
};

// Sums per-report match results.
EvalReport ComputeReport(const std::vector<MatchResult> &results);

// Groups both sides by report_id and matches each report; reports present on
// only one side contribute all-unrelated or all-undetected results. Reports
// are processed in parallel with OpenMP when `jobs` != 1 (0 = runtime
// default).
std::vector<MatchResult> EvaluateCorpus(const std::vector<TraffickingEvent> &predicted,
                                        const std::vector<GoldEvent> &gold,
                                        int jobs = 0,
                                        Eligibility rule = Eligibility::kWhatTrafficked);

// Single-threaded reference for EvaluateCorpus.
std::vector<MatchResult> EvaluateCorpusSerial(
    const std::vector<TraffickingEvent> &predicted, const std::vector<GoldEvent> &gold,
    Eligibility rule = Eligibility::kWhatTrafficked);

}  // namespace wildlife

#endif  // WILDLIFE_EVALUATION_H_
