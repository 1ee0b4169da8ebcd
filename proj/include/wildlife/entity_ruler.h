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

#ifndef WILDLIFE_ENTITY_RULER_H_
#define WILDLIFE_ENTITY_RULER_H_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wildlife/corpus.h"
#include "wildlife/lexicon.h"

namespace wildlife {

struct EntitySpan {
  size_t start = 0;
  size_t end = 0;  // exclusive
  std::string text;
  Label label = Label::kAnimal;
  // Lexicon canonical for ANIMAL/PRODUCT/COUNTRY; the normalized value for
  // CARDINAL (integer) and WEIGHT (kilograms).
  std::string canonical;

  bool operator==(const EntitySpan &) const = default;
};

// A token-level match [begin, end) within one sentence.
struct PhraseMatch {
  size_t begin = 0;
  size_t end = 0;
  const Sense *sense = nullptr;
};

// Token trie over the case-folded token sequences of every lexicon surface.
// Holds a copy of the lexicon, so it is self-contained and immutable.
class CompiledMatcher {
 public:
  explicit CompiledMatcher(Lexicon lexicon);

  // Trie nodes point into the owned lexicon; moving keeps map nodes alive,
  // copying would not.
  CompiledMatcher(const CompiledMatcher &) = delete;
  CompiledMatcher &operator=(const CompiledMatcher &) = delete;
  CompiledMatcher(CompiledMatcher &&) = default;
  CompiledMatcher &operator=(CompiledMatcher &&) = default;

  // Leftmost-longest, non-overlapping matches over `tokens`.
  std::vector<PhraseMatch> Match(std::span<const Token> tokens) const;

  // Longest match starting exactly at tokens[0]; end == 0 if none.
  PhraseMatch LongestAt(std::span<const Token> tokens) const;

  const Lexicon &lexicon() const { return lexicon_; }
  const std::string &version() const { return lexicon_.version(); }
  size_t max_phrase_tokens() const { return max_phrase_tokens_; }

 private:
  struct Node {
    std::unordered_map<std::string, int> children;
    const Sense *sense = nullptr;
  };

  Lexicon lexicon_;
  std::vector<Node> nodes_;
  size_t max_phrase_tokens_ = 0;
};

CompiledMatcher Compile(const Lexicon &lexicon);

// Gazetteer spans of one sentence, sorted and non-overlapping.
std::vector<EntitySpan> FindEntitiesInSentence(const ReportDocument &doc,
                                               const SentenceSpan &sentence,
                                               const CompiledMatcher &matcher);

// Gazetteer spans over the whole document. Matches never cross sentences.
std::vector<EntitySpan> FindEntities(const ReportDocument &doc,
                                     const CompiledMatcher &matcher);

// Union of lexical and numeric spans; a numeric span overlapping any lexical
// span is dropped. Both inputs must be non-overlapping.
std::vector<EntitySpan> Annotate(const ReportDocument &doc,
                                 std::vector<EntitySpan> lexical,
                                 std::vector<EntitySpan> numeric);

inline bool Overlaps(const EntitySpan &a, const EntitySpan &b) {
  return a.start < b.end && b.start < a.end;
}

}  // namespace wildlife

#endif  // WILDLIFE_ENTITY_RULER_H_
