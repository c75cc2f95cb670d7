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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotors/poly.hpp"

namespace cyclotors {

struct PadicRoot {
  Int p;
  unsigned k = 1;
  Int value;
};

// Polynomials over F_p, coefficients reduced, low to high, no trailing zeros.
using FpPoly = std::vector<uint64_t>;

FpPoly fp_reduce(const IntVec& f, uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p);
FpPoly fp_derivative(const FpPoly& a, uint64_t p);
FpPoly fp_powmod_x(uint64_t e, const FpPoly& f, uint64_t p);
uint64_t fp_eval(const FpPoly& f, uint64_t x, uint64_t p);
// Distinct roots in F_p, sorted.
std::vector<uint64_t> fp_roots(const FpPoly& f, uint64_t p);

std::vector<IntMod> roots_mod_p(const PolyQ& f, uint64_t p);
PadicRoot hensel_lift(const PolyQ& f, const PadicRoot& r, unsigned target_k);

struct RootOptions {
  // Largest p^k tried, in bits. 6644 bits is about 10^2000.
  unsigned long precision_cap_bits = 6644;
  int prime_candidates = 4;
  // Residues that are roots of any of these mod p are skipped. Exact when each
  // divides f.
  std::vector<PolyQ> exclude;
};

struct RootResult {
  std::vector<CycElem> roots;
  bool complete = true;
  uint64_t prime = 0;
  unsigned max_precision = 0;
  size_t residues = 0;
  std::string note;
};

RootResult roots_in_cyclotomic(const PolyQ& f, const CycFieldPtr& k, const RootOptions& opt = {});
RootResult roots_in_cyclotomic(const PolyK& f, const RootOptions& opt = {});

struct SqrtResult {
  std::optional<CycElem> root;
  bool complete = true;
};

SqrtResult sqrt_in_cyclotomic(const CycElem& v, const RootOptions& opt = {});

}  // namespace cyclotors
