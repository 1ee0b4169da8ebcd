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

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "wildlife/lexicon.h"

namespace wildlife {

namespace {

struct InflectionTables {
  std::unordered_map<std::string, std::string> plural_of;
  std::unordered_map<std::string, std::string> singular_of;
  std::unordered_set<std::string> invariant;
  // Singular nouns that end in "s" and must not lose it.
  std::unordered_set<std::string> singular_s;

  InflectionTables() {
    const std::pair<const char *, const char *> irregular[] = {
        {"goose", "geese"},   {"mouse", "mice"},        {"louse", "lice"},
        {"ox", "oxen"},       {"tooth", "teeth"},       {"foot", "feet"},
        {"child", "children"}, {"person", "people"},    {"man", "men"},
        {"woman", "women"},   {"buffalo", "buffaloes"}, {"mosquito", "mosquitoes"},
        {"potato", "potatoes"}, {"tomato", "tomatoes"}, {"cactus", "cacti"},
        // f/fe -> ves
        {"wolf", "wolves"},   {"calf", "calves"},       {"leaf", "leaves"},
        {"half", "halves"},   {"knife", "knives"},      {"wife", "wives"},
        {"life", "lives"},    {"elf", "elves"},         {"shelf", "shelves"},
        {"thief", "thieves"}, {"loaf", "loaves"},
    };
    for (const auto &[s, p] : irregular) {
      plural_of.emplace(s, p);
      singular_of.emplace(p, s);
    }
    for (const char *w :
         {"species", "fish", "sheep", "deer", "moose", "bison", "salmon",
          "trout", "swine", "cattle", "grouse", "series", "aircraft",
          // mass nouns
          "ivory", "meat", "bushmeat", "wool", "musk", "bile", "rosewood",
          "timber", "shrimp", "squid", "cod", "elk", "reindeer"}) {
      invariant.insert(w);
    }
    for (const char *w :
         {"rhinoceros", "walrus", "octopus", "platypus", "hippopotamus",
          "ibis", "mantis", "albatross", "virus", "lotus", "iris", "bus",
          "gas", "chaos", "asparagus", "nautilus", "abacus", "pelvis",
          "cuscus", "colobus", "census", "status", "bonus", "campus", "fungus",
          "genus", "focus", "radius", "nucleus", "stimulus", "papyrus",
          "apparatus", "tennis", "chassis", "penis", "trellis", "glottis"}) {
      singular_s.insert(w);
    }
  }
};

const InflectionTables &Tables() {
  static const InflectionTables tables;
  return tables;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string PluralizeWord(std::string_view word) {
  const InflectionTables &t = Tables();
  const std::string w(word);
  if (w.empty()) return w;
  if (auto it = t.plural_of.find(w); it != t.plural_of.end()) return it->second;
  if (t.invariant.count(w)) return w;
  if (w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh")) {
    return w + "es";
  }
  return w + "s";
}

std::string SingularOfWord(std::string_view word) {
  const InflectionTables &t = Tables();
  const std::string w(word);
  if (auto it = t.singular_of.find(w); it != t.singular_of.end()) return it->second;
  if (t.invariant.count(w) || t.plural_of.count(w) || t.singular_s.count(w)) {
    return w;
  }
  const size_t n = w.size();
  if (n > 3 && EndsWith(w, "ies") && !IsVowel(w[n - 4])) {
    return w.substr(0, n - 3) + "y";
  }
  if (EndsWith(w, "sses") || EndsWith(w, "shes") || EndsWith(w, "ches") ||
      EndsWith(w, "xes") || EndsWith(w, "zes")) {
    return w.substr(0, n - 2);
  }
  if (EndsWith(w, "ses")) {
    // walruses, ibises, rhinoceroses vs. horses, tortoises, porpoises.
    const std::string stem = w.substr(0, n - 2);
    if (t.singular_s.count(stem) || (EndsWith(stem, "us") && !EndsWith(stem, "ous")) ||
        (EndsWith(stem, "is") && !EndsWith(stem, "ois"))) {
      return stem;
    }
    return w.substr(0, n - 1);
  }
  // Final s is kept on -ss and on Greek -sis/-xis nouns (basis, axis); other
  // singulars ending in s are listed in singular_s.
  if (n > 1 && w.back() == 's' && !EndsWith(w, "ss") && !EndsWith(w, "sis") &&
      !EndsWith(w, "xis")) {
    return w.substr(0, n - 1);
  }
  return w;
}

template <typename Fn>
std::string InflectHead(std::string_view term, Fn fn) {
  const size_t space = term.find_last_of(' ');
  if (space == std::string_view::npos) return fn(term);
  return std::string(term.substr(0, space + 1)) + fn(term.substr(space + 1));
}

}  // namespace

std::string Pluralize(std::string_view singular) {
  return InflectHead(singular, PluralizeWord);
}

std::string SingularizeByRule(std::string_view plural) {
  return InflectHead(plural, SingularOfWord);
}

}  // namespace wildlife
