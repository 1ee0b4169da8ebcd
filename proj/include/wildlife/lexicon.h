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

#ifndef WILDLIFE_LEXICON_H_
#define WILDLIFE_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wildlife {

enum class Label { kAnimal, kProduct, kCountry, kCardinal, kWeight };

std::string_view LabelName(Label label);
// Accepts the upper-case names ("ANIMAL"); returns nullopt otherwise.
std::optional<Label> ParseLabel(std::string_view name);

// Rule-based English noun inflection for lowercase input. Multi-word terms
// inflect their last word.
std::string Pluralize(std::string_view singular);
std::string SingularizeByRule(std::string_view plural);

struct LexiconEntry {
  std::string surface;
  Label label = Label::kAnimal;
  std::string canonical;
  size_t line = 0;  // source line for diagnostics, 0 when built in memory
};

// What a surface form resolves to.
struct Sense {
  Label label = Label::kAnimal;
  std::string canonical;
  bool operator==(const Sense &) const = default;
};

// Case-folded surface -> (label, canonical). Immutable once built; plural
// surfaces resolve to the same canonical as their singular.
class Lexicon {
 public:
  Lexicon() = default;

  // Builds from rows, adding generated plurals for ANIMAL and PRODUCT
  // entries. Throws ValidationError on conflicting surfaces or bad rows.
  static Lexicon FromEntries(const std::vector<LexiconEntry> &rows,
                             std::string_view origin = "<memory>");

  // Combines several lexicons (e.g. animals, products, countries). Throws
  // ValidationError if a surface resolves differently in two of them.
  static Lexicon Merge(const std::vector<Lexicon> &parts);

  const Sense *Find(std::string_view surface) const;

  // The canonical recorded for `surface`, or the rule-based singular of its
  // case-folded form when the surface is unknown.
  std::string Singularize(std::string_view surface) const;

  size_t size() const { return senses_.size(); }
  bool empty() const { return senses_.empty(); }
  const std::map<std::string, Sense> &senses() const { return senses_; }
  // Rows as loaded, before plural expansion.
  const std::vector<LexiconEntry> &entries() const { return entries_; }
  const std::string &version() const { return version_; }

 private:
  std::map<std::string, Sense> senses_;
  std::map<std::string, std::string> origin_;  // surface -> "file:row" for diagnostics
  std::vector<LexiconEntry> entries_;
  std::string version_;
};

// Parses lexicon CSV text: header "surface,label,canonical", '#' comment
// lines, canonical optional (defaults to the case-folded surface).
Lexicon ParseLexicon(std::string_view csv_text, std::string_view origin);

Lexicon LoadLexicon(const std::filesystem::path &path);

// Value of a "# entries: N" comment line, if present.
std::optional<size_t> DeclaredEntryCount(std::string_view csv_text);

}  // namespace wildlife

#endif  // WILDLIFE_LEXICON_H_
