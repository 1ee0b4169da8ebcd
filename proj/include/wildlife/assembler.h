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

#ifndef WILDLIFE_ASSEMBLER_H_
#define WILDLIFE_ASSEMBLER_H_

#include <vector>

#include "wildlife/corpus.h"
#include "wildlife/entity_ruler.h"
#include "wildlife/event.h"
#include "wildlife/heuristics.h"

namespace wildlife {

// Groups annotated spans into events, one sentence at a time:
//
//  1. A sentence is a candidate if it has an ANIMAL or PRODUCT span or an
//     arrest lexeme.
//  2. Each PRODUCT (left to right) pairs with the nearest unpaired ANIMAL
//     ending within pairing_window tokens before it. Every ANIMAL yields one
//     event (with its product, if paired); every unpaired PRODUCT yields one.
//  3. A CARDINAL ending within quantity_window tokens before an event's first
//     span is its quantity. Each CARDINAL is used at most once.
//  4. Each WEIGHT, left to right, goes to the nearest event without a weight
//     (ties to the leftmost).
//  5. The sentence's arrest count is copied to all its events; a sentence
//     with an arrest lexeme but no ANIMAL/PRODUCT yields one arrest-only
//     event. Numbers used as quantities are not arrest counts.
//  6. Country is the nearest COUNTRY span in the sentence, else the first in
//     the paragraph.
//  7. Year and month come from the report.
//
// `spans` must be sorted and non-overlapping (the output of Annotate).
std::vector<TraffickingEvent> Assemble(const ReportDocument &doc,
                                       const std::vector<EntitySpan> &spans,
                                       const HeuristicConfig &config = {});

}  // namespace wildlife

#endif  // WILDLIFE_ASSEMBLER_H_
