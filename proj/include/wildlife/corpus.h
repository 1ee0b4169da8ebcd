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

#ifndef WILDLIFE_CORPUS_H_
#define WILDLIFE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wildlife {

// A token is a slice [start, end) of the document's raw text. Offsets are
// byte offsets into the UTF-8 document.
struct Token {
  size_t start = 0;
  size_t end = 0;
  std::string text;
  std::string lower;
};

struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;  // exclusive
  std::vector<Token> tokens;
};

struct Paragraph {
  size_t start = 0;
  size_t end = 0;  // exclusive
};

// One monthly brief. The event date of everything extracted from a brief is
// the brief's (year, month).
struct ReportDocument {
  std::string report_id;
  int year = 0;
  int month = 0;
  std::string source_path;
  std::string raw_text;
  std::vector<SentenceSpan> sentences;
  std::vector<Paragraph> paragraphs;

  // Index into `paragraphs` of the paragraph holding sentence `i`.
  size_t ParagraphOf(size_t sentence_index) const;
};

// Abbreviations whose trailing period never ends a sentence. Matching is
// case-insensitive on the whitespace-delimited word carrying the period.
class AbbreviationSet {
 public:
  // "Mr.", "Dr.", "No.", "kg.", "e.g.", "i.e." and a few more honorifics.
  static AbbreviationSet Defaults();

  // One abbreviation per line; blank lines and '#' comments are skipped.
  static AbbreviationSet Load(const std::filesystem::path &path);
  static AbbreviationSet FromList(const std::vector<std::string> &items);

  bool Contains(std::string_view word) const;
  size_t size() const { return folded_.size(); }

 private:
  std::unordered_set<std::string> folded_;
};

struct ReportName {
  std::string report_id;
  std::string source;
  int year = 0;
  int month = 0;
};

// Parses "<source>-<YYYY>-<MM>" (with or without the .txt extension).
// Throws NamingError.
ReportName ParseReportName(std::string_view filename);

// Tokenizes `text`, whose first byte sits at document offset `base`. Tokens
// are maximal letter/digit runs; a hyphen between letters and a comma or
// period between digits join runs ("twenty-five", "1,200", "2.5"); every
// other non-space character is a single-character token.
std::vector<Token> Tokenize(std::string_view text, size_t base = 0);

// Splits on '.', '!' or '?' (plus trailing closing quotes/brackets) followed
// by whitespace and an uppercase letter, or by end of text. Blank lines are
// hard boundaries. Sentences are trimmed of surrounding whitespace and carry
// their tokens.
std::vector<SentenceSpan> SegmentSentences(
    std::string_view text,
    const AbbreviationSet &abbreviations = AbbreviationSet::Defaults());

// Maximal runs of non-blank lines.
std::vector<Paragraph> SplitParagraphs(std::string_view text);

// Builds a document from text already in memory. Throws EncodingError.
ReportDocument BuildReport(
    std::string report_id, int year, int month, std::string text,
    const AbbreviationSet &abbreviations = AbbreviationSet::Defaults());

// Reads and segments one brief. Throws NamingError, EncodingError, or
// std::runtime_error when the file cannot be read.
ReportDocument LoadReport(
    const std::filesystem::path &path,
    const AbbreviationSet &abbreviations = AbbreviationSet::Defaults());

}  // namespace wildlife

#endif  // WILDLIFE_CORPUS_H_
