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

#include "wildlife/pipeline.h"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wildlife/errors.h"
#include "wildlife/measures.h"

namespace wildlife {

namespace {

ExtractionResult ExtractOne(const std::filesystem::path &path, const Pipeline &pipeline) {
  ExtractionResult result;
  result.path = path;
  try {
    const ReportDocument doc = LoadReport(path, pipeline.abbreviations);
    result.report = {doc.report_id, doc.year, doc.month, doc.source_path};
    result.events = ExtractEvents(doc, pipeline);
  } catch (const std::exception &e) {
    result.error = e.what();
    result.events.clear();
  }
  return result;
}

}  // namespace

std::vector<EntitySpan> AnnotateDocument(const ReportDocument &doc,
                                         const CompiledMatcher &matcher) {
  std::vector<EntitySpan> numeric;
  for (const SentenceSpan &s : doc.sentences) {
    auto spans = FindNumericSpans(doc, s);
    numeric.insert(numeric.end(), std::make_move_iterator(spans.begin()),
                   std::make_move_iterator(spans.end()));
  }
  return Annotate(doc, FindEntities(doc, matcher), std::move(numeric));
}

std::vector<TraffickingEvent> ExtractEvents(const ReportDocument &doc,
                                            const Pipeline &pipeline) {
  return Assemble(doc, AnnotateDocument(doc, pipeline.matcher), pipeline.heuristics);
}

std::vector<ExtractionResult> ExtractCorpus(const std::vector<std::filesystem::path> &paths,
                                            const Pipeline &pipeline, int jobs) {
  std::vector<ExtractionResult> results(paths.size());
  const auto n = static_cast<long>(paths.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
#endif
  // ExtractOne catches everything, so no exception escapes the region.
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (jobs != 1)
  for (long i = 0; i < n; ++i) {
    results[i] = ExtractOne(paths[i], pipeline);
  }
  return results;
}

std::vector<ExtractionResult> ExtractCorpusSerial(
    const std::vector<std::filesystem::path> &paths, const Pipeline &pipeline) {
  std::vector<ExtractionResult> results;
  results.reserve(paths.size());
  for (const auto &p : paths) results.push_back(ExtractOne(p, pipeline));
  return results;
}

std::vector<std::filesystem::path> CollectInputs(
    const std::vector<std::filesystem::path> &inputs) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  for (const fs::path &input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> files;
      for (const auto &entry : fs::directory_iterator(input)) {
        const std::string name = entry.path().filename().string();
        if (!entry.is_regular_file() || name.empty() || name.front() == '.') continue;
        files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else if (fs::exists(input)) {
      out.push_back(input);
    } else {
      throw Error("input does not exist: " + input.string());
    }
  }
  return out;
}

}  // namespace wildlife
