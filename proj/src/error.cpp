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

#include "cyclotors/error.hpp"

namespace cyclotors {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::RamifiedPrime: return "ramified-prime";
    case ErrorCode::BadPrime: return "bad-prime";
    case ErrorCode::SingularRoot: return "singular-root";
    case ErrorCode::SingularCurve: return "singular-curve";
    case ErrorCode::BadReduction: return "bad-reduction";
    case ErrorCode::Configuration: return "configuration";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::Transport: return "transport";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace cyclotors
