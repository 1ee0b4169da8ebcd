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

#include "wildlife/corpus.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <regex>
#include <sstream>

#include "wildlife/errors.h"
#include "wildlife/text.h"

namespace wildlife {

namespace {

bool IsWordClass(CharClass c) {
  return c == CharClass::kLetter || c == CharClass::kDigit;
}

bool IsClosingChar(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 ||
         cp == 0x201D;
}

bool IsOpeningChar(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x2018 ||
         cp == 0x201C;
}

bool IsSpaceAt(std::string_view text, size_t pos) {
  size_t len;
  return Classify(DecodeAt(text, pos, &len)) == CharClass::kSpace;
}

// Offset one past the last non-space character in [begin, end), or begin.
size_t TrimEnd(std::string_view text, size_t begin, size_t end) {
  while (end > begin) {
    // Step back to the start of the previous code point.
    size_t p = end - 1;
    while (p > begin && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) {
      --p;
    }
    if (!IsSpaceAt(text, p)) break;
    end = p;
  }
  return end;
}

size_t SkipSpace(std::string_view text, size_t pos, size_t end) {
  while (pos < end) {
    size_t len;
    if (Classify(DecodeAt(text, pos, &len)) != CharClass::kSpace) break;
    pos += len;
  }
  return pos;
}

void EmitSentence(std::string_view text, size_t start, size_t end,
                  std::vector<SentenceSpan> *out) {
  end = TrimEnd(text, start, end);
  if (start >= end) return;
  SentenceSpan s;
  s.start = start;
  s.end = end;
  s.tokens = Tokenize(text.substr(start, end - start), start);
  out->push_back(std::move(s));
}

// The whitespace-delimited word that ends with the period at `dot`, without
// leading opening punctuation.
std::string_view WordEndingAt(std::string_view text, size_t begin, size_t dot) {
  size_t b = dot;
  while (b > begin) {
    size_t p = b - 1;
    while (p > begin && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) {
      --p;
    }
    if (IsSpaceAt(text, p)) break;
    b = p;
  }
  while (b < dot) {
    size_t len;
    if (!IsOpeningChar(DecodeAt(text, b, &len))) break;
    b += len;
  }
  return text.substr(b, dot + 1 - b);
}

void SegmentParagraph(std::string_view text, size_t begin, size_t end,
                      const AbbreviationSet &abbreviations,
                      std::vector<SentenceSpan> *out) {
  size_t sentence_start = SkipSpace(text, begin, end);
  size_t i = sentence_start;
  while (i < end) {
    size_t len;
    const char32_t cp = DecodeAt(text, i, &len);
    if (cp != '.' && cp != '!' && cp != '?') {
      i += len;
      continue;
    }
    size_t j = i + len;
    while (j < end) {
      size_t clen;
      if (!IsClosingChar(DecodeAt(text, j, &clen))) break;
      j += clen;
    }
    const size_t k = SkipSpace(text, j, end);
    bool boundary = false;
    if (k >= end) {
      boundary = true;
    } else if (k > j) {
      size_t ulen;
      boundary = IsUpper(DecodeAt(text, k, &ulen));
    }
    if (boundary && cp == '.' &&
        abbreviations.Contains(WordEndingAt(text, sentence_start, i))) {
      boundary = false;
    }
    if (boundary) {
      EmitSentence(text, sentence_start, j, out);
      sentence_start = k;
      i = k;
    } else {
      i = j;
    }
  }
  if (sentence_start < end) EmitSentence(text, sentence_start, end, out);
}

}  // namespace

size_t ReportDocument::ParagraphOf(size_t sentence_index) const {
  const size_t start = sentences.at(sentence_index).start;
  auto it = std::upper_bound(
      paragraphs.begin(), paragraphs.end(), start,
      [](size_t offset, const Paragraph &p) { return offset < p.start; });
  return it == paragraphs.begin() ? 0 : std::distance(paragraphs.begin(), it) - 1;
}

AbbreviationSet AbbreviationSet::Defaults() {
  return FromList({"Mr.", "Mrs.", "Ms.", "Dr.", "Prof.", "St.", "No.", "Nos.",
                   "kg.", "e.g.", "i.e.", "Lt.", "Col.", "Gen.", "Sgt.",
                   "Capt.", "approx.", "vs."});
}

AbbreviationSet AbbreviationSet::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read abbreviation list " + path.string());
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view item = Trim(line);
    if (item.empty() || item.front() == '#') continue;
    items.emplace_back(item);
  }
  return FromList(items);
}

AbbreviationSet AbbreviationSet::FromList(const std::vector<std::string> &items) {
  AbbreviationSet set;
  for (const auto &item : items) set.folded_.insert(CaseFold(item));
  return set;
}

bool AbbreviationSet::Contains(std::string_view word) const {
  return folded_.count(CaseFold(word)) > 0;
}

ReportName ParseReportName(std::string_view filename) {
  std::string stem(std::filesystem::path(std::string(filename)).filename().string());
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".txt") == 0) {
    stem.resize(stem.size() - 4);
  }
  static const std::regex kPattern(R"(^(.+)-([0-9]{4})-([0-9]{2})$)");
  std::smatch m;
  if (!std::regex_match(stem, m, kPattern)) {
    throw NamingError("report name '" + std::string(filename) +
                      "' does not match <source>-<YYYY>-<MM>.txt");
  }
  ReportName name;
  name.report_id = stem;
  name.source = m[1].str();
  name.year = std::stoi(m[2].str());
  name.month = std::stoi(m[3].str());
  if (name.month < 1 || name.month > 12) {
    throw NamingError("report name '" + std::string(filename) +
                      "' has month outside 1-12");
  }
  return name;
}

std::vector<Token> Tokenize(std::string_view text, size_t base) {
  std::vector<Token> tokens;
  auto emit = [&](size_t b, size_t e) {
    Token t;
    t.start = base + b;
    t.end = base + e;
    t.text = std::string(text.substr(b, e - b));
    t.lower = CaseFold(t.text);
    tokens.push_back(std::move(t));
  };
  auto class_at = [&](size_t pos) {
    size_t len;
    return Classify(DecodeAt(text, pos, &len));
  };

  size_t run_start = std::string_view::npos;
  CharClass last = CharClass::kSpace;
  size_t i = 0;
  while (i < text.size()) {
    size_t len;
    const char32_t cp = DecodeAt(text, i, &len);
    const CharClass c = Classify(cp);
    if (IsWordClass(c)) {
      if (run_start == std::string_view::npos) run_start = i;
      last = c;
      i += len;
      continue;
    }
    if (run_start != std::string_view::npos && i + len < text.size()) {
      const CharClass next = class_at(i + len);
      const bool hyphen_join =
          cp == '-' && last == CharClass::kLetter && next == CharClass::kLetter;
      const bool numeric_join = (cp == ',' || cp == '.') &&
                                last == CharClass::kDigit &&
                                next == CharClass::kDigit;
      if (hyphen_join || numeric_join) {
        i += len;
        continue;
      }
    }
    if (run_start != std::string_view::npos) {
      emit(run_start, i);
      run_start = std::string_view::npos;
    }
    if (c == CharClass::kPunct) emit(i, i + len);
    i += len;
  }
  if (run_start != std::string_view::npos) emit(run_start, text.size());
  return tokens;
}

std::vector<Paragraph> SplitParagraphs(std::string_view text) {
  std::vector<Paragraph> paragraphs;
  size_t para_start = std::string_view::npos;
  size_t para_end = 0;
  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t nl = text.find('\n', line_start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(line_start, nl - line_start);
    const bool blank = Trim(line).empty();
    if (!blank) {
      if (para_start == std::string_view::npos) {
        para_start = line_start + line.find_first_not_of(" \t\r\v\f");
      }
      para_end = line_start + line.find_last_not_of(" \t\r\v\f") + 1;
    } else if (para_start != std::string_view::npos) {
      paragraphs.push_back({para_start, para_end});
      para_start = std::string_view::npos;
    }
    if (nl == text.size()) break;
    line_start = nl + 1;
  }
  if (para_start != std::string_view::npos) {
    paragraphs.push_back({para_start, para_end});
  }
  return paragraphs;
}

std::vector<SentenceSpan> SegmentSentences(std::string_view text,
                                           const AbbreviationSet &abbreviations) {
  std::vector<SentenceSpan> sentences;
  for (const Paragraph &p : SplitParagraphs(text)) {
    SegmentParagraph(text, p.start, p.end, abbreviations, &sentences);
  }
  return sentences;
}

ReportDocument BuildReport(std::string report_id, int year, int month,
                           std::string text,
                           const AbbreviationSet &abbreviations) {
  if (!IsValidUtf8(text)) {
    throw EncodingError("report " + report_id + " is not valid UTF-8");
  }
  ReportDocument doc;
  doc.report_id = std::move(report_id);
  doc.year = year;
  doc.month = month;
  doc.raw_text = std::move(text);
  doc.paragraphs = SplitParagraphs(doc.raw_text);
  doc.sentences = SegmentSentences(doc.raw_text, abbreviations);
  return doc;
}

ReportDocument LoadReport(const std::filesystem::path &path,
                          const AbbreviationSet &abbreviations) {
  const std::string filename = path.filename().string();
  if (filename.size() < 4 || filename.compare(filename.size() - 4, 4, ".txt") != 0) {
    throw NamingError("report file '" + filename + "' must have a .txt extension");
  }
  const ReportName name = ParseReportName(filename);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read report " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ReportDocument doc = BuildReport(name.report_id, name.year, name.month,
                                   buf.str(), abbreviations);
  doc.source_path = path.string();
  return doc;
}

}  // namespace wildlife
