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

#include "wildlife/heuristics.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "wildlife/errors.h"
#include "wildlife/text.h"

namespace wildlife {

HeuristicConfig ParseHeuristics(std::string_view text) {
  HeuristicConfig config;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    const std::string where = "heuristics line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ParseError(where + ": expected key=value");
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size() || parsed < 0) {
      throw ParseError(where + ": '" + std::string(value) +
                       "' is not a non-negative integer");
    }
    if (key == "pairing_window") {
      config.pairing_window = parsed;
    } else if (key == "quantity_window") {
      config.quantity_window = parsed;
    } else if (key == "arrest_window") {
      config.arrest_window = parsed;
    } else if (key == "arrest_default") {
      config.arrest_default = parsed;
    } else {
      throw ParseError(where + ": unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

HeuristicConfig LoadHeuristics(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read heuristics " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseHeuristics(buf.str());
}

}  // namespace wildlife
