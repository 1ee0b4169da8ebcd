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

#include "wildlife/measures.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <regex>
#include <string_view>
#include <unordered_map>

#include "wildlife/text.h"

namespace wildlife {

namespace {

constexpr int64_t kMaxNumber = 999'999;

const std::unordered_map<std::string_view, int> &SmallNumbers() {
  static const std::unordered_map<std::string_view, int> table = {
      {"zero", 0},      {"one", 1},        {"two", 2},        {"three", 3},
      {"four", 4},      {"five", 5},       {"six", 6},        {"seven", 7},
      {"eight", 8},     {"nine", 9},       {"ten", 10},       {"eleven", 11},
      {"twelve", 12},   {"thirteen", 13},  {"fourteen", 14},  {"fifteen", 15},
      {"sixteen", 16},  {"seventeen", 17}, {"eighteen", 18},  {"nineteen", 19},
  };
  return table;
}

const std::unordered_map<std::string_view, int> &Tens() {
  static const std::unordered_map<std::string_view, int> table = {
      {"twenty", 20}, {"thirty", 30},  {"forty", 40},  {"fifty", 50},
      {"sixty", 60},  {"seventy", 70}, {"eighty", 80}, {"ninety", 90},
  };
  return table;
}

std::optional<int> Lookup(const std::unordered_map<std::string_view, int> &t,
                          std::string_view word) {
  auto it = t.find(word);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Unit(std::string_view w) {
  auto v = Lookup(SmallNumbers(), w);
  if (v && *v >= 1 && *v <= 9) return v;
  return std::nullopt;
}

// 1..99 (and "zero" when allow_zero) from number words.
std::optional<NumberMatch> ParseSmall(std::span<const Token> t, bool allow_zero) {
  if (t.empty()) return std::nullopt;
  const std::string &w = t[0].lower;
  if (auto v = Lookup(SmallNumbers(), w)) {
    if (*v == 0 && !allow_zero) return std::nullopt;
    return NumberMatch{*v, 1};
  }
  if (const size_t dash = w.find('-'); dash != std::string::npos) {
    auto tens = Lookup(Tens(), std::string_view(w).substr(0, dash));
    auto unit = Unit(std::string_view(w).substr(dash + 1));
    if (tens && unit) return NumberMatch{*tens + *unit, 1};
    return std::nullopt;
  }
  if (auto tens = Lookup(Tens(), w)) {
    if (t.size() > 1) {
      if (auto unit = Unit(t[1].lower)) return NumberMatch{*tens + *unit, 2};
    }
    return NumberMatch{*tens, 1};
  }
  return std::nullopt;
}

// 1..999 from number words.
std::optional<NumberMatch> ParseGroup(std::span<const Token> t) {
  auto small = ParseSmall(t, false);
  if (!small) return std::nullopt;
  size_t i = small->consumed;
  if (small->value <= 9 && i < t.size() && t[i].lower == "hundred") {
    NumberMatch m{small->value * 100, i + 1};
    size_t j = m.consumed;
    if (j < t.size() && t[j].lower == "and") ++j;
    if (auto rest = ParseSmall(t.subspan(std::min(j, t.size())), false)) {
      m.value += rest->value;
      m.consumed = j + rest->consumed;
    }
    return m;
  }
  return small;
}

std::optional<NumberMatch> ParseWords(std::span<const Token> t) {
  if (!t.empty() && t[0].lower == "zero") return NumberMatch{0, 1};
  auto group = ParseGroup(t);
  if (!group) return std::nullopt;
  size_t i = group->consumed;
  if (i < t.size() && t[i].lower == "thousand") {
    NumberMatch m{group->value * 1000, i + 1};
    size_t j = m.consumed;
    if (j < t.size() && t[j].lower == "and") ++j;
    if (auto rest = ParseGroup(t.subspan(std::min(j, t.size())))) {
      m.value += rest->value;
      m.consumed = j + rest->consumed;
    }
    return m;
  }
  return group;
}

// Digits with optional comma grouping and an optional decimal part.
std::optional<double> ParseDecimal(std::string_view s, bool *is_integer) {
  static const std::regex kGrouped(R"(^[0-9]{1,3}(,[0-9]{3})+(\.[0-9]+)?$)");
  static const std::regex kPlain(R"(^[0-9]+(\.[0-9]+)?$)");
  const std::string str(s);
  if (!std::regex_match(str, kGrouped) && !std::regex_match(str, kPlain)) {
    return std::nullopt;
  }
  std::string digits;
  for (char c : str) {
    if (c != ',') digits.push_back(c);
  }
  *is_integer = digits.find('.') == std::string::npos;
  return std::strtod(digits.c_str(), nullptr);
}

struct UnitInfo {
  double multiply = 1;
  double divide = 1;
};

const std::unordered_map<std::string_view, UnitInfo> &Units() {
  static const std::unordered_map<std::string_view, UnitInfo> table = {
      {"kg", {1, 1}},          {"kgs", {1, 1}},          {"kilogram", {1, 1}},
      {"kilograms", {1, 1}},   {"kilogramme", {1, 1}},   {"kilogrammes", {1, 1}},
      {"kilo", {1, 1}},        {"kilos", {1, 1}},        {"t", {1000, 1}},
      {"ton", {1000, 1}},      {"tons", {1000, 1}},      {"tonne", {1000, 1}},
      {"tonnes", {1000, 1}},   {"g", {1, 1000}},         {"gram", {1, 1000}},
      {"grams", {1, 1000}},    {"gramme", {1, 1000}},    {"grammes", {1, 1000}},
      {"lb", {0.45359237, 1}}, {"lbs", {0.45359237, 1}}, {"pound", {0.45359237, 1}},
      {"pounds", {0.45359237, 1}},
  };
  return table;
}

struct NumericHit {
  bool is_weight = false;
  TokenRange tokens;
  int64_t count = 0;
  Weight weight;
};

std::vector<NumericHit> Scan(std::span<const Token> tokens) {
  static const std::regex kFused(R"(^([0-9]+(?:\.[0-9]+)?)([a-z]+)$)");
  std::vector<NumericHit> hits;
  size_t i = 0;
  while (i < tokens.size()) {
    const std::string &lower = tokens[i].lower;
    std::smatch m;
    if (std::regex_match(lower, m, kFused)) {
      const double v = std::strtod(m[1].str().c_str(), nullptr);
      if (auto kg = ConvertToKg(v, m[2].str()); kg && *kg > 0) {
        hits.push_back({true, {i, i + 1}, 0, {*kg, v, m[2].str()}});
      }
      ++i;
      continue;
    }

    double value = 0;
    size_t consumed = 0;
    bool integral = false;
    if (auto d = ParseDecimal(lower, &integral)) {
      value = *d;
      consumed = 1;
      if (integral && value > kMaxNumber) integral = false;
    } else if (auto n = ParseNumber(tokens.subspan(i))) {
      value = static_cast<double>(n->value);
      consumed = n->consumed;
      integral = true;
    }
    if (consumed == 0) {
      ++i;
      continue;
    }
    const size_t after = i + consumed;
    if (after < tokens.size()) {
      if (auto kg = ConvertToKg(value, tokens[after].lower); kg && *kg > 0) {
        hits.push_back({true, {i, after + 1}, 0, {*kg, value, tokens[after].lower}});
        i = after + 1;
        continue;
      }
    }
    if (integral) {
      hits.push_back({false, {i, after}, static_cast<int64_t>(value), {}});
    }
    i = after;
  }
  return hits;
}

EntitySpan MakeSpan(const ReportDocument &doc, const SentenceSpan &sentence,
                    TokenRange r, Label label, std::string canonical) {
  EntitySpan span;
  span.start = sentence.tokens[r.begin].start;
  span.end = sentence.tokens[r.end - 1].end;
  span.text = doc.raw_text.substr(span.start, span.end - span.start);
  span.label = label;
  span.canonical = std::move(canonical);
  return span;
}

bool IsYear(const Token &t, int64_t value) {
  return t.text.size() == 4 && value >= 1900 && value <= 2099 &&
         std::all_of(t.text.begin(), t.text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::optional<NumberMatch> ParseNumber(std::span<const Token> tokens) {
  if (tokens.empty()) return std::nullopt;
  bool integral = false;
  if (auto d = ParseDecimal(tokens[0].text, &integral)) {
    if (!integral || *d > kMaxNumber) return std::nullopt;
    return NumberMatch{static_cast<int64_t>(*d), 1};
  }
  return ParseWords(tokens);
}

std::optional<double> ConvertToKg(double value, std::string_view unit) {
  auto it = Units().find(unit);
  if (it == Units().end()) return std::nullopt;
  return value * it->second.multiply / it->second.divide;
}

std::vector<WeightMatch> ParseWeights(const ReportDocument &doc,
                                      const SentenceSpan &sentence) {
  std::vector<WeightMatch> out;
  for (const NumericHit &h : Scan(sentence.tokens)) {
    if (!h.is_weight) continue;
    WeightMatch w;
    w.span = MakeSpan(doc, sentence, h.tokens, Label::kWeight,
                      FormatDecimal(h.weight.value_kg));
    w.weight = h.weight;
    w.tokens = h.tokens;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<CardinalMatch> FindCardinals(const ReportDocument &doc,
                                         const SentenceSpan &sentence) {
  std::vector<CardinalMatch> out;
  for (const NumericHit &h : Scan(sentence.tokens)) {
    if (h.is_weight) continue;
    CardinalMatch c;
    c.span = MakeSpan(doc, sentence, h.tokens, Label::kCardinal,
                      std::to_string(h.count));
    c.value = h.count;
    c.tokens = h.tokens;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EntitySpan> FindNumericSpans(const ReportDocument &doc,
                                         const SentenceSpan &sentence) {
  std::vector<EntitySpan> out;
  for (const NumericHit &h : Scan(sentence.tokens)) {
    if (h.is_weight) {
      out.push_back(MakeSpan(doc, sentence, h.tokens, Label::kWeight,
                             FormatDecimal(h.weight.value_kg)));
    } else {
      out.push_back(MakeSpan(doc, sentence, h.tokens, Label::kCardinal,
                             std::to_string(h.count)));
    }
  }
  return out;
}

bool IsArrestLexeme(std::string_view lower_token) {
  return lower_token == "arrest" || lower_token == "arrested" ||
         lower_token == "arrests" || lower_token == "apprehended" ||
         lower_token == "detained" || lower_token == "jailed";
}

std::optional<ArrestCount> DetectArrestCount(const SentenceSpan &sentence,
                                             const HeuristicConfig &config,
                                             std::span<const TokenRange> excluded) {
  const auto &tokens = sentence.tokens;
  std::vector<size_t> lexemes;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (IsArrestLexeme(tokens[i].lower)) lexemes.push_back(i);
  }
  if (lexemes.empty()) return std::nullopt;

  std::vector<NumericHit> candidates;
  for (const NumericHit &h : Scan(tokens)) {
    if (h.is_weight) continue;
    if (h.tokens.end - h.tokens.begin == 1 && IsYear(tokens[h.tokens.begin], h.count)) {
      continue;
    }
    const bool skip = std::any_of(excluded.begin(), excluded.end(), [&](TokenRange r) {
      return r.begin < h.tokens.end && h.tokens.begin < r.end;
    });
    if (!skip) candidates.push_back(h);
  }

  const auto window = static_cast<size_t>(config.arrest_window);
  for (size_t lexeme : lexemes) {
    const NumericHit *best = nullptr;
    size_t best_distance = 0;
    for (const NumericHit &h : candidates) {
      // Candidates are in token order, so on equal distance the preceding
      // number is seen first and kept.
      size_t distance;
      if (h.tokens.end <= lexeme) {
        distance = lexeme - (h.tokens.end - 1);
      } else if (h.tokens.begin > lexeme) {
        distance = h.tokens.begin - lexeme;
      } else {
        continue;
      }
      if (distance > window) continue;
      if (best == nullptr || distance < best_distance) {
        best = &h;
        best_distance = distance;
      }
    }
    if (best != nullptr) return ArrestCount{best->count};
  }
  return ArrestCount{config.arrest_default};
}

}  // namespace wildlife
