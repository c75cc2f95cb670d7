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

#include <ostream>
#include <string>
#include <vector>

#include "cyclotors/lmfdb.hpp"
#include "cyclotors/torsion.hpp"

namespace cyclotors {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string title;
  std::vector<std::string> details;
  double seconds = 0;
};

struct VerifyOptions {
  FetchOptions fetch;
  TorsionOptions torsion;
  // Progress lines; null for silence.
  std::ostream* progress = nullptr;
};

constexpr int kCriterionCount = 10;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt = {});
// "[PASS] 3 title (1.2 s)"
std::string criterion_line(const CriterionResult& r);

}  // namespace cyclotors
