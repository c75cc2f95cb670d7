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
#include <memory>
#include <string>
#include <vector>

#include "cyclotors/arith.hpp"

namespace cyclotors {

class CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

// Q(zeta_N) as Q[z]/Phi_N. N = 1 is Q itself.
class CycField {
 public:
  static CycFieldPtr get(uint64_t n);
  static CycFieldPtr rationals() { return get(1); }

  uint64_t conductor() const { return n_; }
  size_t degree() const { return d_; }
  const IntVec& minpoly() const { return phi_; }
  // z^e reduced modulo Phi_N, for 0 <= e < N.
  const IntVec& power(uint64_t e) const { return powers_[e % n_]; }
  const std::vector<uint64_t>& units() const { return units_; }
  bool is_rational() const { return d_ == 1; }

  explicit CycField(uint64_t n);

 private:
  uint64_t n_;
  size_t d_;
  IntVec phi_;
  std::vector<IntVec> powers_;
  std::vector<uint64_t> units_;
};

IntVec cyclotomic_poly(uint64_t n);

// Integral numerator vector over a positive common denominator, kept
// reduced so that equal elements have equal representations.
class CycElem {
 public:
  CycElem() : CycElem(CycField::rationals()) {}
  explicit CycElem(CycFieldPtr k);
  CycElem(CycFieldPtr k, const Rat& q);
  CycElem(CycFieldPtr k, long q) : CycElem(std::move(k), Rat(q)) {}
  static CycElem from_coords(CycFieldPtr k, const std::vector<Rat>& coords);
  static CycElem from_ints(CycFieldPtr k, IntVec num, Int den);
  static CycElem zeta(CycFieldPtr k, int64_t e = 1);

  const CycFieldPtr& field() const { return k_; }
  const IntVec& num() const { return num_; }
  const Int& den() const { return den_; }
  std::vector<Rat> coords() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_value() const;

  CycElem operator+(const CycElem& o) const;
  CycElem operator-(const CycElem& o) const;
  CycElem operator-() const;
  CycElem operator*(const CycElem& o) const;
  CycElem operator*(const Rat& q) const;
  CycElem operator/(const CycElem& o) const { return *this * o.inv(); }
  CycElem& operator+=(const CycElem& o) { return *this = *this + o; }
  CycElem& operator-=(const CycElem& o) { return *this = *this - o; }
  CycElem& operator*=(const CycElem& o) { return *this = *this * o; }
  bool operator==(const CycElem& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator!=(const CycElem& o) const { return !(*this == o); }
  bool operator<(const CycElem& o) const;

  CycElem inv() const;
  CycElem pow(uint64_t e) const;
  // Norm down to Q.
  Rat norm() const;
  std::string str(const char* var = "z") const;

 private:
  void normalize();
  void same_field(const CycElem& o) const;

  CycFieldPtr k_;
  IntVec num_;
  Int den_;
};

CycElem elem_mul(const CycElem& x, const CycElem& y);
CycElem elem_inv(const CycElem& x);
// Image of x under the inclusion Q(zeta_M) -> Q(zeta_N), M | N.
CycElem embed(const CycElem& x, const CycFieldPtr& target);

struct GaloisElement {
  CycFieldPtr field;
  uint64_t a = 1;
};

GaloisElement galois_element(const CycFieldPtr& k, int64_t a);
CycElem galois_apply(const GaloisElement& s, const CycElem& x);
std::vector<GaloisElement> galois_group(const CycFieldPtr& k);
// The subgroup of Gal(Q(zeta_N)/Q) fixing Q(zeta_M), M | N.
std::vector<GaloisElement> fixing_subgroup(const CycFieldPtr& k, uint64_t m);
bool fixed_by(const CycElem& x, const std::vector<GaloisElement>& h);

uint64_t field_conductor(uint64_t k);
bool contains_cyclotomic(uint64_t m, uint64_t n);

struct SplittingData {
  uint64_t p = 0;
  uint64_t conductor = 1;
  uint64_t inertia_degree = 1;
  uint64_t num_primes = 1;
};

SplittingData splitting_data(uint64_t p, uint64_t n);
uint64_t largest_cyclic_quotient(uint64_t n);

}  // namespace cyclotors
