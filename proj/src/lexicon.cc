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

#include "wildlife/lexicon.h"

#include <fstream>
#include <regex>
#include <sstream>

#include "wildlife/csv.h"
#include "wildlife/errors.h"
#include "wildlife/text.h"

namespace wildlife {

namespace {

// Case-folds and collapses internal whitespace runs to single spaces.
std::string NormalizeSurface(std::string_view surface) {
  const std::string folded = CaseFold(Trim(surface));
  std::string out;
  out.reserve(folded.size());
  bool in_space = false;
  for (char c : folded) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::string Describe(const Sense &s) {
  return std::string(LabelName(s.label)) + " '" + s.canonical + "'";
}

}  // namespace

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kAnimal: return "ANIMAL";
    case Label::kProduct: return "PRODUCT";
    case Label::kCountry: return "COUNTRY";
    case Label::kCardinal: return "CARDINAL";
    case Label::kWeight: return "WEIGHT";
  }
  return "UNKNOWN";
}

std::optional<Label> ParseLabel(std::string_view name) {
  for (Label l : {Label::kAnimal, Label::kProduct, Label::kCountry,
                  Label::kCardinal, Label::kWeight}) {
    if (LabelName(l) == name) return l;
  }
  return std::nullopt;
}

Lexicon Lexicon::FromEntries(const std::vector<LexiconEntry> &rows,
                             std::string_view origin) {
  Lexicon lex;
  auto add = [&](const std::string &surface, const Sense &sense,
                 const std::string &where) {
    auto [it, inserted] = lex.senses_.emplace(surface, sense);
    if (inserted) {
      lex.origin_[surface] = where;
      return;
    }
    if (it->second == sense) return;
    throw ValidationError("conflicting lexicon surface '" + surface + "': " +
                          lex.origin_[surface] + " -> " + Describe(it->second) +
                          " vs " + where + " -> " + Describe(sense));
  };

  for (size_t i = 0; i < rows.size(); ++i) {
    const LexiconEntry &row = rows[i];
    const std::string where = std::string(origin) + ":" +
                              std::to_string(row.line ? row.line : i + 1);
    const std::string surface = NormalizeSurface(row.surface);
    if (surface.empty()) throw ValidationError(where + ": empty surface");
    if (row.label != Label::kAnimal && row.label != Label::kProduct &&
        row.label != Label::kCountry) {
      throw ValidationError(where + ": label " + std::string(LabelName(row.label)) +
                            " cannot appear in a lexicon");
    }
    std::string canonical = row.canonical.empty()
                                ? surface
                                : std::string(Trim(row.canonical));
    if (canonical != NormalizeSurface(canonical)) {
      throw ValidationError(where + ": canonical '" + canonical +
                            "' must be lowercase with single spaces");
    }
    LexiconEntry stored{std::string(Trim(row.surface)), row.label, canonical,
                        row.line ? row.line : i + 1};
    lex.entries_.push_back(stored);
    add(surface, Sense{row.label, canonical}, where);
  }

  // Plurals go in after every explicit row so a conflict always names the
  // row that generated it.
  for (size_t i = 0; i < lex.entries_.size(); ++i) {
    const LexiconEntry &e = lex.entries_[i];
    if (e.label == Label::kCountry) continue;
    const std::string surface = NormalizeSurface(e.surface);
    const std::string plural = Pluralize(surface);
    if (plural == surface) continue;
    add(plural, Sense{e.label, e.canonical},
        std::string(origin) + ":" + std::to_string(e.line) + " (plural)");
  }

  std::string digest;
  for (const auto &[surface, sense] : lex.senses_) {
    digest += surface + '\t' + std::string(LabelName(sense.label)) + '\t' +
              sense.canonical + '\n';
  }
  lex.version_ = ContentHash(digest);
  return lex;
}

Lexicon Lexicon::Merge(const std::vector<Lexicon> &parts) {
  Lexicon lex;
  std::string digest;
  for (const Lexicon &part : parts) {
    for (const auto &[surface, sense] : part.senses_) {
      auto where = part.origin_.find(surface);
      const std::string origin =
          where == part.origin_.end() ? std::string("?") : where->second;
      auto [it, inserted] = lex.senses_.emplace(surface, sense);
      if (inserted) {
        lex.origin_[surface] = origin;
      } else if (!(it->second == sense)) {
        throw ValidationError("conflicting lexicon surface '" + surface + "': " +
                              lex.origin_[surface] + " -> " + Describe(it->second) +
                              " vs " + origin + " -> " + Describe(sense));
      }
    }
    lex.entries_.insert(lex.entries_.end(), part.entries_.begin(),
                        part.entries_.end());
    digest += part.version_ + ';';
  }
  lex.version_ = ContentHash(digest);
  return lex;
}

const Sense *Lexicon::Find(std::string_view surface) const {
  auto it = senses_.find(NormalizeSurface(surface));
  return it == senses_.end() ? nullptr : &it->second;
}

std::string Lexicon::Singularize(std::string_view surface) const {
  const std::string normalized = NormalizeSurface(surface);
  if (auto it = senses_.find(normalized); it != senses_.end()) {
    return it->second.canonical;
  }
  return SingularizeByRule(normalized);
}

Lexicon ParseLexicon(std::string_view csv_text, std::string_view origin) {
  const std::vector<CsvRecord> records = ReadCsv(csv_text, '#');
  if (records.empty()) return Lexicon::FromEntries({}, origin);
  const auto &header = records.front().fields;
  if (header != std::vector<std::string>{"surface", "label", "canonical"}) {
    throw ValidationError(std::string(origin) +
                          ": header must be 'surface,label,canonical'");
  }
  std::vector<LexiconEntry> rows;
  for (size_t r = 1; r < records.size(); ++r) {
    const CsvRecord &rec = records[r];
    const std::string where =
        std::string(origin) + " line " + std::to_string(rec.line);
    if (rec.fields.size() < 2 || rec.fields.size() > 3) {
      throw ValidationError(where + ": expected 2 or 3 fields");
    }
    const auto label = ParseLabel(Trim(rec.fields[1]));
    if (!label || *label == Label::kCardinal || *label == Label::kWeight) {
      throw ValidationError(where + ": unknown label '" + rec.fields[1] + "'");
    }
    rows.push_back({rec.fields[0], *label,
                    rec.fields.size() == 3 ? rec.fields[2] : std::string(),
                    rec.line});
  }
  return Lexicon::FromEntries(rows, origin);
}

Lexicon LoadLexicon(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (!IsValidUtf8(text)) {
    throw EncodingError("lexicon " + path.string() + " is not valid UTF-8");
  }
  return ParseLexicon(text, path.filename().string());
}

std::optional<size_t> DeclaredEntryCount(std::string_view csv_text) {
  static const std::regex kDecl(R"(^#\s*entries:\s*([0-9]+)\s*$)");
  std::istringstream in{std::string(csv_text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, kDecl)) return std::stoul(m[1].str());
  }
  return std::nullopt;
}

}  // namespace wildlife
