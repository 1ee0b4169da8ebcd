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

#ifndef WILDLIFE_HEURISTICS_H_
#define WILDLIFE_HEURISTICS_H_

#include <filesystem>
#include <string_view>

namespace wildlife {

// Window constants for event assembly. All distances are in tokens.
struct HeuristicConfig {
  // A PRODUCT pairs with an ANIMAL ending at most this many tokens before it.
  int pairing_window = 3;
  // A CARDINAL ending at most this many tokens before a species/product span
  // becomes its quantity.
  int quantity_window = 2;
  // Numbers this close to an arrest lexeme are read as the arrest count.
  int arrest_window = 5;
  // Arrest count used when an arrest lexeme has no number nearby.
  int arrest_default = 1;
};

// key=value lines; '#' starts a comment. Unknown keys and non-integer or
// negative values throw ParseError.
HeuristicConfig ParseHeuristics(std::string_view text);
HeuristicConfig LoadHeuristics(const std::filesystem::path &path);

}  // namespace wildlife

#endif  // WILDLIFE_HEURISTICS_H_
