// Copyright 2026 The cyclotors Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cyclotors::embedded {

extern const std::string_view curves;
extern const std::string_view corpus;
extern const std::string_view known_sets;
extern const std::string_view images;
extern const std::string_view verdicts;

}  // namespace cyclotors::embedded

namespace cyclotors::detail {

// Tab-separated rows, skipping blank lines and '#' comments.
inline std::vector<std::vector<std::string>> tsv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    size_t c = 0;
    while (true) {
      size_t t = line.find('\t', c);
      cells.emplace_back(line.substr(c, t == std::string_view::npos ? std::string_view::npos : t - c));
      if (t == std::string_view::npos) break;
      c = t + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace cyclotors::detail
