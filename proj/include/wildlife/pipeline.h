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

#ifndef WILDLIFE_PIPELINE_H_
#define WILDLIFE_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "wildlife/assembler.h"
#include "wildlife/corpus.h"
#include "wildlife/entity_ruler.h"
#include "wildlife/event.h"
#include "wildlife/event_store.h"
#include "wildlife/heuristics.h"

namespace wildlife {

// Everything a worker needs to turn a brief into events. Immutable after
// construction and shared read-only across threads.
struct Pipeline {
  CompiledMatcher matcher;
  HeuristicConfig heuristics;
  AbbreviationSet abbreviations = AbbreviationSet::Defaults();

  explicit Pipeline(const Lexicon &lexicon, HeuristicConfig config = {},
                    AbbreviationSet abbrevs = AbbreviationSet::Defaults())
      : matcher(Compile(lexicon)),
        heuristics(config),
        abbreviations(std::move(abbrevs)) {}
};

// Gazetteer spans merged with numeric spans, sorted and non-overlapping.
std::vector<EntitySpan> AnnotateDocument(const ReportDocument &doc,
                                         const CompiledMatcher &matcher);

std::vector<TraffickingEvent> ExtractEvents(const ReportDocument &doc,
                                            const Pipeline &pipeline);

struct ExtractionResult {
  std::filesystem::path path;
  ReportInfo report;
  std::vector<TraffickingEvent> events;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

// Loads and extracts each file independently; a failing file records its
// error and does not affect the others. Results keep input order.
// Documents are processed with an OpenMP parallel loop; jobs == 0 uses the
// runtime default thread count.
std::vector<ExtractionResult> ExtractCorpus(const std::vector<std::filesystem::path> &paths,
                                            const Pipeline &pipeline, int jobs = 0);

// Single-threaded reference for ExtractCorpus.
std::vector<ExtractionResult> ExtractCorpusSerial(
    const std::vector<std::filesystem::path> &paths, const Pipeline &pipeline);

// Expands directories to their regular, non-hidden files (sorted); plain
// files pass through. Throws Error for paths that do not exist.
std::vector<std::filesystem::path> CollectInputs(
    const std::vector<std::filesystem::path> &inputs);

}  // namespace wildlife

#endif  // WILDLIFE_PIPELINE_H_
