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

#include "wildlife/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wildlife/errors.h"

namespace wildlife {

namespace {

std::optional<int64_t> QuantityOf(const TraffickingEvent &e) {
  if (!e.quantity) return std::nullopt;
  return e.quantity->value;
}

std::optional<int64_t> ArrestsOf(const TraffickingEvent &e) {
  if (!e.arrest_count) return std::nullopt;
  return e.arrest_count->value;
}

std::optional<double> WeightOf(const TraffickingEvent &e) {
  if (!e.weight) return std::nullopt;
  return e.weight->value_kg;
}

bool PresentAndEqual(const std::optional<std::string> &a,
                     const std::optional<std::string> &b) {
  return a && b && *a == *b;
}

struct ReportGroups {
  std::vector<std::string> ids;
  std::map<std::string, std::vector<TraffickingEvent>> predicted;
  std::map<std::string, std::vector<GoldEvent>> gold;
};

ReportGroups Group(const std::vector<TraffickingEvent> &predicted,
                   const std::vector<GoldEvent> &gold) {
  ReportGroups g;
  std::set<std::string> ids;
  for (const auto &e : predicted) {
    g.predicted[e.report_id].push_back(e);
    ids.insert(e.report_id);
  }
  for (const auto &e : gold) {
    g.gold[e.report_id].push_back(e);
    ids.insert(e.report_id);
  }
  g.ids.assign(ids.begin(), ids.end());
  return g;
}

MatchResult MatchGroup(const ReportGroups &g, const std::string &id, Eligibility rule) {
  static const std::vector<TraffickingEvent> kEmpty;
  auto p = g.predicted.find(id);
  auto q = g.gold.find(id);
  return MatchEvents(p == g.predicted.end() ? kEmpty : p->second,
                     q == g.gold.end() ? kEmpty : q->second, rule);
}

}  // namespace

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kFullyCorrect: return "FULLY_CORRECT";
    case Outcome::kPartiallyCorrect: return "PARTIALLY_CORRECT";
    case Outcome::kUnrelated: return "UNRELATED";
    case Outcome::kUndetected: return "UNDETECTED";
  }
  return "UNKNOWN";
}

std::string_view FieldName(Field field) {
  switch (field) {
    case Field::kArrestCount: return "arrest_count";
    case Field::kCountry: return "country";
    case Field::kProduct: return "product";
    case Field::kSpecies: return "species";
    case Field::kQuantity: return "quantity";
    case Field::kWeight: return "weight_kg";
  }
  return "unknown";
}

bool FieldAgree(const std::optional<std::string> &a, const std::optional<std::string> &b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool FieldAgree(const std::optional<int64_t> &a, const std::optional<int64_t> &b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool FieldAgree(const std::optional<double> &a, const std::optional<double> &b) {
  if (!a || !b) return !a && !b;
  return std::fabs(*a - *b) <= kWeightToleranceKg;
}

std::array<bool, kFieldCount> CompareFields(const TraffickingEvent &a,
                                            const TraffickingEvent &b) {
  return {
      FieldAgree(ArrestsOf(a), ArrestsOf(b)),
      FieldAgree(a.country, b.country),
      FieldAgree(a.product, b.product),
      FieldAgree(a.species, b.species),
      FieldAgree(QuantityOf(a), QuantityOf(b)),
      FieldAgree(WeightOf(a), WeightOf(b)),
  };
}

std::optional<Eligibility> ParseEligibility(std::string_view name) {
  if (name == "what-trafficked") return Eligibility::kWhatTrafficked;
  if (name == "any") return Eligibility::kAnyPair;
  return std::nullopt;
}

bool Eligible(const TraffickingEvent &predicted, const GoldEvent &gold, Eligibility rule) {
  if (rule == Eligibility::kAnyPair) return true;
  const bool bare = !predicted.species && !predicted.product && !gold.species && !gold.product;
  return bare || PresentAndEqual(predicted.species, gold.species) ||
         PresentAndEqual(predicted.product, gold.product);
}

MatchResult MatchEvents(const std::vector<TraffickingEvent> &predicted,
                        const std::vector<GoldEvent> &gold, Eligibility rule) {
  const std::string *report = nullptr;
  for (const auto *list : {&predicted, &gold}) {
    for (const auto &e : *list) {
      if (report == nullptr) {
        report = &e.report_id;
      } else if (*report != e.report_id) {
        throw UsageError("MatchEvents needs a single report, got '" + *report +
                         "' and '" + e.report_id + "'");
      }
    }
  }

  struct Candidate {
    int score;
    size_t p;
    size_t g;
  };
  std::vector<Candidate> candidates;
  for (size_t p = 0; p < predicted.size(); ++p) {
    for (size_t g = 0; g < gold.size(); ++g) {
      if (!Eligible(predicted[p], gold[g], rule)) continue;
      const auto agree = CompareFields(predicted[p], gold[g]);
      candidates.push_back(
          {static_cast<int>(std::count(agree.begin(), agree.end(), true)), p, g});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              return std::tie(b.score, a.p, a.g) < std::tie(a.score, b.p, b.g);
            });

  MatchResult result;
  result.predicted.assign(predicted.size(), Outcome::kUnrelated);
  result.assignment.assign(predicted.size(), std::nullopt);
  result.gold_detected.assign(gold.size(), false);
  for (const Candidate &c : candidates) {
    if (result.assignment[c.p] || result.gold_detected[c.g]) continue;
    result.assignment[c.p] = c.g;
    result.gold_detected[c.g] = true;
    result.predicted[c.p] = c.score == static_cast<int>(kFieldCount)
                                ? Outcome::kFullyCorrect
                                : Outcome::kPartiallyCorrect;
    const auto agree = CompareFields(predicted[c.p], gold[c.g]);
    for (size_t f = 0; f < kFieldCount; ++f) result.field_agreement[f] += agree[f];
  }
  return result;
}

double EvalReport::DetectionRate() const {
  return total_gold == 0 ? 0.0 : static_cast<double>(detected_gold) / total_gold;
}

std::string EvalReport::SummaryLine() const {
  std::ostringstream out;
  out << "fully=" << fully_correct << " partial=" << partially_correct
      << " unrelated=" << unrelated << " undetected=" << undetected
      << " total_gold=" << total_gold;
  return out.str();
}

std::string EvalReport::ToText() const {
  char rate[32];
  std::snprintf(rate, sizeof(rate), "%.4f", DetectionRate());
  std::ostringstream out;
  out << SummaryLine() << '\n'
      << "predictions:       " << predictions << '\n'
      << "fully correct:     " << fully_correct << '\n'
      << "partially correct: " << partially_correct << '\n'
      << "unrelated:         " << unrelated << '\n'
      << "undetected:        " << undetected << " of " << total_gold << '\n'
      << "detection rate:    " << rate << " (" << detected_gold << "/" << total_gold
      << ")\n"
      << "field agreement over matched pairs:\n";
  for (size_t f = 0; f < kFieldCount; ++f) {
    out << "  " << FieldName(static_cast<Field>(f)) << ": " << field_agreement[f] << '\n';
  }
  return out.str();
}

std::string EvalReport::ToKeyValue() const {
  char rate[32];
  std::snprintf(rate, sizeof(rate), "%.6f", DetectionRate());
  std::ostringstream out;
  out << "fully_correct: " << fully_correct << '\n'
      << "partially_correct: " << partially_correct << '\n'
      << "unrelated: " << unrelated << '\n'
      << "undetected: " << undetected << '\n'
      << "detected_gold: " << detected_gold << '\n'
      << "total_gold: " << total_gold << '\n'
      << "predictions: " << predictions << '\n'
      << "detection_rate: " << rate << '\n';
  for (size_t f = 0; f < kFieldCount; ++f) {
    out << "agree_" << FieldName(static_cast<Field>(f)) << ": " << field_agreement[f]
        << '\n';
  }
  return out.str();
}

EvalReport ComputeReport(const std::vector<MatchResult> &results) {
  EvalReport report;
  for (const MatchResult &r : results) {
    for (Outcome o : r.predicted) {
      ++report.predictions;
      switch (o) {
        case Outcome::kFullyCorrect: ++report.fully_correct; break;
        case Outcome::kPartiallyCorrect: ++report.partially_correct; break;
        case Outcome::kUnrelated: ++report.unrelated; break;
        case Outcome::kUndetected: break;  // never assigned to predictions
      }
    }
    for (bool detected : r.gold_detected) {
      ++report.total_gold;
      if (detected) {
        ++report.detected_gold;
      } else {
        ++report.undetected;
      }
    }
    for (size_t f = 0; f < kFieldCount; ++f) {
      report.field_agreement[f] += r.field_agreement[f];
    }
  }
  return report;
}

std::vector<MatchResult> EvaluateCorpus(const std::vector<TraffickingEvent> &predicted,
                                        const std::vector<GoldEvent> &gold, int jobs,
                                        Eligibility rule) {
  const ReportGroups groups = Group(predicted, gold);
  const auto n = static_cast<long>(groups.ids.size());
  std::vector<MatchResult> results(groups.ids.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
#endif
  // MatchEvents only throws on mixed report ids, which grouping rules out.
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (jobs != 1)
  for (long i = 0; i < n; ++i) {
    results[i] = MatchGroup(groups, groups.ids[i], rule);
  }
  return results;
}

std::vector<MatchResult> EvaluateCorpusSerial(const std::vector<TraffickingEvent> &predicted,
                                              const std::vector<GoldEvent> &gold,
                                              Eligibility rule) {
  const ReportGroups groups = Group(predicted, gold);
  std::vector<MatchResult> results;
  results.reserve(groups.ids.size());
  for (const auto &id : groups.ids) results.push_back(MatchGroup(groups, id, rule));
  return results;
}

}  // namespace wildlife
