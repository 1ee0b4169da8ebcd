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

#include "wildlife/entity_ruler.h"

#include <algorithm>

namespace wildlife {

CompiledMatcher::CompiledMatcher(Lexicon lexicon) : lexicon_(std::move(lexicon)) {
  nodes_.emplace_back();
  for (const auto &[surface, sense] : lexicon_.senses()) {
    const std::vector<Token> tokens = Tokenize(surface);
    if (tokens.empty()) continue;
    int node = 0;
    for (const Token &t : tokens) {
      auto it = nodes_[node].children.find(t.lower);
      if (it == nodes_[node].children.end()) {
        const int next = static_cast<int>(nodes_.size());
        nodes_[node].children.emplace(t.lower, next);
        nodes_.emplace_back();
        node = next;
      } else {
        node = it->second;
      }
    }
    // Surfaces differing only in spacing ("sea  turtle") share a node; the
    // lexicon already rejected conflicting senses for the normalized form.
    if (nodes_[node].sense == nullptr) nodes_[node].sense = &sense;
    max_phrase_tokens_ = std::max(max_phrase_tokens_, tokens.size());
  }
}

PhraseMatch CompiledMatcher::LongestAt(std::span<const Token> tokens) const {
  PhraseMatch best;
  int node = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    auto it = nodes_[node].children.find(tokens[i].lower);
    if (it == nodes_[node].children.end()) break;
    node = it->second;
    if (nodes_[node].sense != nullptr) {
      best.begin = 0;
      best.end = i + 1;
      best.sense = nodes_[node].sense;
    }
  }
  return best;
}

std::vector<PhraseMatch> CompiledMatcher::Match(std::span<const Token> tokens) const {
  std::vector<PhraseMatch> matches;
  size_t i = 0;
  while (i < tokens.size()) {
    PhraseMatch m = LongestAt(tokens.subspan(i));
    if (m.end == 0) {
      ++i;
      continue;
    }
    m.begin = i;
    m.end += i;
    matches.push_back(m);
    i = m.end;
  }
  return matches;
}

CompiledMatcher Compile(const Lexicon &lexicon) { return CompiledMatcher(lexicon); }

std::vector<EntitySpan> FindEntitiesInSentence(const ReportDocument &doc,
                                               const SentenceSpan &sentence,
                                               const CompiledMatcher &matcher) {
  std::vector<EntitySpan> spans;
  for (const PhraseMatch &m : matcher.Match(sentence.tokens)) {
    EntitySpan span;
    span.start = sentence.tokens[m.begin].start;
    span.end = sentence.tokens[m.end - 1].end;
    span.text = doc.raw_text.substr(span.start, span.end - span.start);
    span.label = m.sense->label;
    // Same value Lexicon::Singularize gives for the matched surface, but
    // immune to spacing differences between the text and the lexicon row.
    span.canonical = m.sense->canonical;
    spans.push_back(std::move(span));
  }
  return spans;
}

std::vector<EntitySpan> FindEntities(const ReportDocument &doc,
                                     const CompiledMatcher &matcher) {
  std::vector<EntitySpan> spans;
  for (const SentenceSpan &s : doc.sentences) {
    auto found = FindEntitiesInSentence(doc, s, matcher);
    spans.insert(spans.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
  }
  return spans;
}

std::vector<EntitySpan> Annotate([[maybe_unused]] const ReportDocument &doc,
                                 std::vector<EntitySpan> lexical,
                                 std::vector<EntitySpan> numeric) {
  std::sort(lexical.begin(), lexical.end(),
            [](const EntitySpan &a, const EntitySpan &b) { return a.start < b.start; });
  std::vector<EntitySpan> merged = lexical;
  for (EntitySpan &n : numeric) {
    // Lexical spans are disjoint, so their ends are sorted too.
    auto it = std::upper_bound(
        lexical.begin(), lexical.end(), n.start,
        [](size_t pos, const EntitySpan &s) { return pos < s.end; });
    bool overlap = false;
    for (; it != lexical.end() && it->start < n.end; ++it) {
      if (Overlaps(*it, n)) {
        overlap = true;
        break;
      }
    }
    if (!overlap) merged.push_back(std::move(n));
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const EntitySpan &a, const EntitySpan &b) {
                     return a.start < b.start;
                   });
  return merged;
}

}  // namespace wildlife
