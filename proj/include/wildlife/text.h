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

#ifndef WILDLIFE_TEXT_H_
#define WILDLIFE_TEXT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace wildlife {

// Minimal UTF-8 helpers. Only the character classes the tokenizer and
// sentence splitter care about are modelled.

// Returns true if the bytes form valid UTF-8 (no overlongs, no surrogates).
bool IsValidUtf8(std::string_view bytes);

// Decodes the code point starting at text[pos]; stores its byte length in
// *length. Invalid sequences decode as the single byte value.
char32_t DecodeAt(std::string_view text, size_t pos, size_t *length);

void AppendUtf8(char32_t cp, std::string *out);

enum class CharClass { kSpace, kLetter, kDigit, kPunct };

CharClass Classify(char32_t cp);

bool IsUpper(char32_t cp);

// Lowercases ASCII and the Latin-1 / Latin Extended-A uppercase letters.
char32_t FoldChar(char32_t cp);
std::string CaseFold(std::string_view text);

std::string_view Trim(std::string_view s);

// Renders a non-negative decimal with at most `places` fractional digits and
// no trailing zeros ("513", "0.5", "0.907185").
std::string FormatDecimal(double value, int places = 6);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string ContentHash(std::string_view bytes);

}  // namespace wildlife

#endif  // WILDLIFE_TEXT_H_
