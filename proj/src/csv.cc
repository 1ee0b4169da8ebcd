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

#include "wildlife/csv.h"

#include "wildlife/errors.h"

namespace wildlife {

std::vector<CsvRecord> ReadCsv(std::string_view text, char comment_prefix) {
  std::vector<CsvRecord> records;
  size_t i = 0;
  size_t line = 1;
  const size_t n = text.size();
  while (i < n) {
    // Skip blank and comment lines at record starts.
    if (text[i] == '\n') {
      ++i, ++line;
      continue;
    }
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
      i += 2, ++line;
      continue;
    }
    if (comment_prefix != 0 && text[i] == comment_prefix) {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }

    CsvRecord record;
    record.line = line;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    for (;;) {
      if (i >= n) {
        if (quoted) {
          throw ParseError("unterminated quoted field starting on line " +
                           std::to_string(record.line));
        }
        record.fields.push_back(std::move(field));
        break;
      }
      const char c = text[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            quoted = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        continue;
      }
      if (c == '"' && field.empty() && !field_was_quoted) {
        quoted = true;
        field_was_quoted = true;
        ++i;
      } else if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        ++i;
      } else if (c == '\n' || (c == '\r' && i + 1 < n && text[i + 1] == '\n')) {
        record.fields.push_back(std::move(field));
        i += (c == '\r') ? 2 : 1;
        ++line;
        break;
      } else {
        field.push_back(c);
        ++i;
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CsvLine(const std::vector<std::string> &fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line.push_back(',');
    line += CsvEscape(fields[i]);
  }
  line.push_back('\n');
  return line;
}

}  // namespace wildlife
