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

#include "wildlife/assembler.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "wildlife/measures.h"

namespace wildlife {

namespace {

struct LocatedSpan {
  const EntitySpan *span = nullptr;
  TokenRange tokens;
};

struct Draft {
  const LocatedSpan *animal = nullptr;
  const LocatedSpan *product = nullptr;
  TokenRange anchor;
  std::optional<Quantity> quantity;
  std::optional<Weight> weight;
  std::optional<std::string> country;
};

TokenRange Locate(const SentenceSpan &sentence, const EntitySpan &span) {
  const auto &t = sentence.tokens;
  auto by_start = [](const Token &tok, size_t pos) { return tok.start < pos; };
  const auto b = std::lower_bound(t.begin(), t.end(), span.start, by_start);
  const auto e = std::lower_bound(t.begin(), t.end(), span.end, by_start);
  return {static_cast<size_t>(b - t.begin()), static_cast<size_t>(e - t.begin())};
}

// Tokens strictly between two ranges, plus one; 0 when they overlap.
size_t Distance(TokenRange a, TokenRange b) {
  if (a.end <= b.begin) return b.begin - (a.end - 1);
  if (b.end <= a.begin) return a.begin - (b.end - 1);
  return 0;
}

}  // namespace

std::vector<TraffickingEvent> Assemble(const ReportDocument &doc,
                                       const std::vector<EntitySpan> &spans,
                                       const HeuristicConfig &config) {
  std::vector<TraffickingEvent> events;
  auto span_it = spans.begin();

  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    const SentenceSpan &sentence = doc.sentences[si];
    while (span_it != spans.end() && span_it->start < sentence.start) ++span_it;

    std::vector<LocatedSpan> animals, products, countries, cardinals, weights;
    for (auto it = span_it; it != spans.end() && it->end <= sentence.end; ++it) {
      LocatedSpan located{&*it, Locate(sentence, *it)};
      switch (it->label) {
        case Label::kAnimal: animals.push_back(located); break;
        case Label::kProduct: products.push_back(located); break;
        case Label::kCountry: countries.push_back(located); break;
        case Label::kCardinal: cardinals.push_back(located); break;
        case Label::kWeight: weights.push_back(located); break;
      }
    }

    bool has_lexeme = false;
    size_t first_lexeme = 0;
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (IsArrestLexeme(sentence.tokens[i].lower)) {
        has_lexeme = true;
        first_lexeme = i;
        break;
      }
    }
    if (animals.empty() && products.empty() && !has_lexeme) continue;

    // Pairing.
    std::vector<const LocatedSpan *> animal_partner(animals.size(), nullptr);
    std::vector<bool> product_paired(products.size(), false);
    for (size_t p = 0; p < products.size(); ++p) {
      const TokenRange pr = products[p].tokens;
      int best = -1;
      for (size_t a = 0; a < animals.size(); ++a) {
        const TokenRange ar = animals[a].tokens;
        if (animal_partner[a] != nullptr || ar.end > pr.begin) continue;
        if (pr.begin - (ar.end - 1) > static_cast<size_t>(config.pairing_window)) continue;
        if (best < 0 || ar.end > animals[best].tokens.end) best = static_cast<int>(a);
      }
      if (best >= 0) {
        animal_partner[best] = &products[p];
        product_paired[p] = true;
      }
    }

    std::vector<Draft> drafts;
    for (size_t a = 0; a < animals.size(); ++a) {
      Draft d;
      d.animal = &animals[a];
      d.product = animal_partner[a];
      d.anchor = {animals[a].tokens.begin,
                  d.product ? d.product->tokens.end : animals[a].tokens.end};
      drafts.push_back(d);
    }
    for (size_t p = 0; p < products.size(); ++p) {
      if (product_paired[p]) continue;
      Draft d;
      d.product = &products[p];
      d.anchor = products[p].tokens;
      drafts.push_back(d);
    }
    std::stable_sort(drafts.begin(), drafts.end(), [](const Draft &x, const Draft &y) {
      return x.anchor.begin < y.anchor.begin;
    });

    // Quantity.
    std::vector<bool> cardinal_used(cardinals.size(), false);
    std::vector<TokenRange> quantity_ranges;
    for (Draft &d : drafts) {
      int best = -1;
      for (size_t c = 0; c < cardinals.size(); ++c) {
        const TokenRange cr = cardinals[c].tokens;
        if (cardinal_used[c] || cr.end > d.anchor.begin) continue;
        if (d.anchor.begin - (cr.end - 1) > static_cast<size_t>(config.quantity_window)) {
          continue;
        }
        const long long value = std::atoll(cardinals[c].span->canonical.c_str());
        if (value < 1) continue;
        if (best < 0 || cr.end > cardinals[best].tokens.end) best = static_cast<int>(c);
      }
      if (best >= 0) {
        cardinal_used[best] = true;
        d.quantity = Quantity{std::atoll(cardinals[best].span->canonical.c_str())};
        quantity_ranges.push_back(cardinals[best].tokens);
      }
    }

    const std::optional<ArrestCount> arrests =
        DetectArrestCount(sentence, config, quantity_ranges);
    if (drafts.empty()) {
      Draft d;
      d.anchor = {first_lexeme, first_lexeme + 1};
      drafts.push_back(d);
    }

    // Weight.
    std::vector<WeightMatch> parsed_weights;
    if (!weights.empty()) parsed_weights = ParseWeights(doc, sentence);
    for (const LocatedSpan &w : weights) {
      int best = -1;
      size_t best_distance = std::numeric_limits<size_t>::max();
      for (size_t i = 0; i < drafts.size(); ++i) {
        if (drafts[i].weight) continue;
        const size_t dist = Distance(w.tokens, drafts[i].anchor);
        if (dist < best_distance) {
          best = static_cast<int>(i);
          best_distance = dist;
        }
      }
      if (best < 0) continue;
      Weight weight;
      auto exact = std::find_if(parsed_weights.begin(), parsed_weights.end(),
                                [&](const WeightMatch &m) {
                                  return m.span.start == w.span->start;
                                });
      if (exact != parsed_weights.end()) {
        weight = exact->weight;
      } else {
        weight.value_kg = std::strtod(w.span->canonical.c_str(), nullptr);
        weight.original_value = weight.value_kg;
        weight.original_unit = "kg";
      }
      drafts[best].weight = weight;
    }

    // Country.
    std::optional<std::string> paragraph_country;
    if (!drafts.empty()) {
      const Paragraph &para = doc.paragraphs[doc.ParagraphOf(si)];
      for (const EntitySpan &s : spans) {
        if (s.label == Label::kCountry && s.start >= para.start && s.end <= para.end) {
          paragraph_country = s.canonical;
          break;
        }
      }
    }
    for (Draft &d : drafts) {
      const LocatedSpan *best = nullptr;
      size_t best_distance = std::numeric_limits<size_t>::max();
      for (const LocatedSpan &c : countries) {
        const size_t dist = Distance(c.tokens, d.anchor);
        if (dist < best_distance) {
          best = &c;
          best_distance = dist;
        }
      }
      d.country = best ? std::optional<std::string>(best->span->canonical)
                       : paragraph_country;
    }

    for (const Draft &d : drafts) {
      TraffickingEvent e;
      e.report_id = doc.report_id;
      e.year = doc.year;
      e.month = doc.month;
      e.country = d.country;
      if (d.animal) e.species = d.animal->span->canonical;
      if (d.product) e.product = d.product->span->canonical;
      e.quantity = d.quantity;
      e.weight = d.weight;
      e.arrest_count = arrests;
      e.sentence_index = static_cast<int>(si);
      events.push_back(std::move(e));
    }
  }
  return events;
}

}  // namespace wildlife
