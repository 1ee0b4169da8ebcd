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

#ifndef WILDLIFE_MEASURES_H_
#define WILDLIFE_MEASURES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wildlife/corpus.h"
#include "wildlife/entity_ruler.h"
#include "wildlife/heuristics.h"

namespace wildlife {

// Item count attached to a species or product.
struct Quantity {
  int64_t value = 1;
  bool operator==(const Quantity &) const = default;
};

struct Weight {
  double value_kg = 0;
  double original_value = 0;
  std::string original_unit;
  bool operator==(const Weight &) const = default;
};

struct ArrestCount {
  int64_t value = 0;
  bool operator==(const ArrestCount &) const = default;
};

struct NumberMatch {
  int64_t value = 0;
  size_t consumed = 0;  // tokens used, starting at tokens[0]
};

// Token range [begin, end) within a sentence.
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;
};

// Reads an integer 0..999,999 starting at tokens[0]: digit strings with
// optional thousands separators, or English number words ("twenty-five",
// "three hundred and twelve", "two thousand"). Greedy.
std::optional<NumberMatch> ParseNumber(std::span<const Token> tokens);

struct WeightMatch {
  EntitySpan span;  // label WEIGHT, canonical = kilograms
  Weight weight;
  TokenRange tokens;
};

// "<number> <unit>" and fused forms such as "513kg".
std::vector<WeightMatch> ParseWeights(const ReportDocument &doc,
                                      const SentenceSpan &sentence);

// Kilograms per unit for a lowercase unit token, or nullopt. Grams are the
// one unit applied by division so that "500 g" is exactly 0.5 kg.
std::optional<double> ConvertToKg(double value, std::string_view unit);

struct CardinalMatch {
  EntitySpan span;  // label CARDINAL, canonical = integer value
  int64_t value = 0;
  TokenRange tokens;
};

// Numbers that are not part of a weight.
std::vector<CardinalMatch> FindCardinals(const ReportDocument &doc,
                                         const SentenceSpan &sentence);

// All WEIGHT and CARDINAL spans of a sentence, sorted, non-overlapping.
std::vector<EntitySpan> FindNumericSpans(const ReportDocument &doc,
                                         const SentenceSpan &sentence);

bool IsArrestLexeme(std::string_view lower_token);

// If the sentence has an arrest lexeme, the number nearest to it within
// config.arrest_window tokens (ties go to the preceding number), or
// config.arrest_default when there is none. Numbers inside weights, four-digit
// years (1900-2099) and any token range in `excluded` are not candidates.
std::optional<ArrestCount> DetectArrestCount(
    const SentenceSpan &sentence, const HeuristicConfig &config = {},
    std::span<const TokenRange> excluded = {});

}  // namespace wildlife

#endif  // WILDLIFE_MEASURES_H_
