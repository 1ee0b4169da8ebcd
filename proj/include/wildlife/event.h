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

#ifndef WILDLIFE_EVENT_H_
#define WILDLIFE_EVENT_H_

#include <optional>
#include <string>

#include "wildlife/measures.h"

namespace wildlife {

// One extracted seizure/arrest record. Canonical strings are lowercase
// singular. Dates are the source report's (year, month).
struct TraffickingEvent {
  std::string report_id;
  int year = 0;
  int month = 0;
  std::optional<std::string> country;
  std::optional<std::string> species;
  std::optional<std::string> product;
  std::optional<Quantity> quantity;
  std::optional<Weight> weight;
  std::optional<ArrestCount> arrest_count;
  int sentence_index = 0;

  bool operator==(const TraffickingEvent &) const = default;
};

// Gold annotations use the same record; sentence_index is the row order
// within its report.
using GoldEvent = TraffickingEvent;

}  // namespace wildlife

#endif  // WILDLIFE_EVENT_H_
