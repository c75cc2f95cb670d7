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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclotors {

using Int = mpz_class;
using Rat = mpq_class;

struct IntMod {
  Int value;
  Int modulus;

  IntMod() : value(0), modulus(2) {}
  IntMod(const Int& v, const Int& m);
  bool operator==(const IntMod& o) const {
    return value == o.value && modulus == o.modulus;
  }
};

using IntVec = std::vector<Int>;

struct Lattice {
  std::vector<IntVec> basis;
};

Int parse_int(const std::string& s);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);
Rat make_rat(const Int& num, const Int& den);

// Non-negative residue of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);
Int inv_mod(const Int& a, const Int& m);
Int pow_mod(const Int& a, const Int& e, const Int& m);
// Smallest r >= 0 with r^n >= a, for a >= 0.
Int root_ceil(const Int& a, unsigned long n);
Int ceil_rat(const Rat& q);

std::optional<Rat> rational_reconstruct(const IntMod& r, const Int& bound);
IntMod crt_combine(const std::vector<IntMod>& residues);
Lattice lll_reduce(const Lattice& l);
// Integer determinant by fraction-free elimination.
Int determinant(std::vector<IntVec> m);

// Word-size helpers for small moduli and exponents.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);
bool is_prime_u64(uint64_t n);
uint64_t gcd_u64(uint64_t a, uint64_t b);
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);
uint64_t euler_phi(uint64_t n);
// Multiplicative order of a modulo n, gcd(a, n) = 1.
uint64_t mul_order(uint64_t a, uint64_t n);
int moebius(uint64_t n);

}  // namespace cyclotors
