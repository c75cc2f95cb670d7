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
#include <vector>

#include "cyclotors/filter.hpp"
#include "cyclotors/torsion.hpp"
#include "cyclotors/verify.hpp"

namespace cyclotors {

enum class Format { Text, Structured };

Format parse_format(const std::string& s);

struct CurveInfo {
  std::string label;  // may be empty for explicit a-invariants
  std::string ainvs;  // "[a1,a2,a3,a4,a6]"
};

std::string render_torsion(const CurveInfo& c, const TorsionGroup& g, Format f);
std::string render_filter(const FilterReport& r, Format f);
std::string render_images(const std::vector<ImageRecord>& rows, Format f);
std::string render_verification(const std::vector<CriterionResult>& rs, Format f);

}  // namespace cyclotors
