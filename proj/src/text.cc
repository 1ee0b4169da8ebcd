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

#include "wildlife/text.h"

#include <cmath>
#include <cstdio>

namespace wildlife {

namespace {

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

}  // namespace

bool IsValidUtf8(std::string_view bytes) {
  size_t i = 0;
  const size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    size_t len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || InRange(cp, 0xD800, 0xDFFF)) return false;
    i += len;
  }
  return true;
}

char32_t DecodeAt(std::string_view text, size_t pos, size_t *length) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  size_t len = 1;
  char32_t cp = b0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07;
  }
  if (len > 1) {
    if (pos + len > text.size()) {
      *length = 1;
      return b0;
    }
    for (size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[pos + k]);
      if ((b & 0xC0) != 0x80) {
        *length = 1;
        return b0;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
  }
  *length = len;
  return cp;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

CharClass Classify(char32_t cp) {
  if (cp == ' ' || InRange(cp, '\t', '\r')) return CharClass::kSpace;
  if (cp == 0xA0 || cp == 0x1680 || InRange(cp, 0x2000, 0x200A) ||
      cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
      cp == 0x3000 || cp == 0xFEFF) {
    return CharClass::kSpace;
  }
  if (InRange(cp, '0', '9')) return CharClass::kDigit;
  if (InRange(cp, 'a', 'z') || InRange(cp, 'A', 'Z')) return CharClass::kLetter;
  if (cp < 0x80) return CharClass::kPunct;
  // Latin-1 controls, punctuation and symbols; multiplication/division signs.
  if (InRange(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) {
    return CharClass::kPunct;
  }
  // General punctuation, currency, letterlike/arrows/math/box drawing, CJK
  // punctuation, fullwidth ASCII punctuation.
  if (InRange(cp, 0x2010, 0x2BFF) || InRange(cp, 0x3001, 0x303F) ||
      InRange(cp, 0xFF01, 0xFF0F)) {
    return CharClass::kPunct;
  }
  return CharClass::kLetter;
}

bool IsUpper(char32_t cp) {
  if (InRange(cp, 'A', 'Z')) return true;
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return true;
  if (InRange(cp, 0x100, 0x137) || InRange(cp, 0x14A, 0x177)) {
    return cp % 2 == 0;
  }
  if (InRange(cp, 0x139, 0x148) || InRange(cp, 0x179, 0x17E)) {
    return cp % 2 == 1;
  }
  return cp == 0x178;
}

char32_t FoldChar(char32_t cp) {
  if (!IsUpper(cp)) return cp;
  if (cp == 0x178) return 0xFF;
  if (cp < 0x100) return cp + 0x20;
  return cp + 1;
}

std::string CaseFold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.push_back(static_cast<char>(b >= 'A' && b <= 'Z' ? b + 0x20 : b));
      ++i;
      continue;
    }
    size_t len;
    const char32_t cp = DecodeAt(text, i, &len);
    if (len == 1) {
      out.push_back(text[i]);
    } else {
      AppendUtf8(FoldChar(cp), &out);
    }
    i += len;
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  const char *ws = " \t\r\n\v\f";
  const size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string FormatDecimal(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string ContentHash(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wildlife
