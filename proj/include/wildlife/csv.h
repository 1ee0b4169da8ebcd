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

#ifndef WILDLIFE_CSV_H_
#define WILDLIFE_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wildlife {

struct CsvRecord {
  size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and
// newlines. Blank lines are skipped, as are lines starting with
// `comment_prefix` when it is non-zero. Throws ParseError on an unterminated
// quote.
std::vector<CsvRecord> ReadCsv(std::string_view text, char comment_prefix = 0);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string CsvEscape(std::string_view field);

std::string CsvLine(const std::vector<std::string> &fields);

}  // namespace wildlife

#endif  // WILDLIFE_CSV_H_
