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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cyclotors/arith.hpp"
#include "cyclotors/cyclo.hpp"
#include "cyclotors/error.hpp"

namespace cyclotors {

inline bool coef_is_zero(const Rat& x) { return x == 0; }
inline bool coef_is_zero(const CycElem& x) { return x.is_zero(); }
inline Rat coef_from_long(const Rat&, long v) { return Rat(v); }
inline CycElem coef_from_long(const CycElem& like, long v) { return CycElem(like.field(), v); }

// Dense univariate polynomial, coefficients low to high. The stored zero
// element fixes the coefficient field.
template <class T>
class Poly {
 public:
  Poly() : zero_() {}
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(T zero, std::vector<T> coeffs) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  static Poly monomial(const T& zero, const T& coef, size_t deg) {
    std::vector<T> c(deg + 1, zero);
    c[deg] = coef;
    return Poly(zero, std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& lead() const {
    if (c_.empty()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(zero_, std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return Poly(zero_, std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(zero_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (coef_is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        if (!coef_is_zero(o.c_[j])) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(zero_, std::move(r));
  }
  Poly scale(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x * s;
    return Poly(zero_, std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division over the coefficient field.
  std::pair<Poly, Poly> divmod(const Poly& b) const {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<T> r = c_;
    long db = b.degree();
    if (degree() < db) return {Poly(zero_), *this};
    std::vector<T> q(c_.size() - db, zero_);
    T inv_lead = coef_from_long(zero_, 1) / b.lead();
    for (long i = degree(); i >= db; --i) {
      if (coef_is_zero(r[i])) continue;
      T f = r[i] * inv_lead;
      q[i - db] = f;
      for (long j = 0; j <= db; ++j)
        if (!coef_is_zero(b.c_[j])) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {Poly(zero_, std::move(q)), Poly(zero_, std::move(r))};
  }
  Poly operator%(const Poly& b) const { return divmod(b).second; }
  Poly operator/(const Poly& b) const { return divmod(b).first; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(zero_);
    std::vector<T> r(c_.size() - 1, zero_);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * coef_from_long(zero_, static_cast<long>(i));
    return Poly(zero_, std::move(r));
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(coef_from_long(zero_, 1) / lead());
  }

  T eval(const T& x) const {
    T acc = zero_;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && coef_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
  T zero_;
};

using PolyQ = Poly<Rat>;
using PolyK = Poly<CycElem>;

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = b.monic();
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

PolyQ polyq_from_ints(const IntVec& c);
CycElem eval_at(const PolyQ& f, const CycElem& x);
// Primitive integer polynomial with positive leading coefficient.
IntVec primitive_part(const PolyQ& f);
PolyK to_polyk(const PolyQ& f, const CycFieldPtr& k);
std::string poly_str(const PolyQ& f, const char* var = "x");
std::string poly_str(const PolyK& f, const char* var = "x");

// Integer polynomial helpers used by the division polynomial recurrences.
IntVec zpoly_add(const IntVec& a, const IntVec& b);
IntVec zpoly_sub(const IntVec& a, const IntVec& b);
IntVec zpoly_mul(const IntVec& a, const IntVec& b);
IntVec zpoly_scale(const IntVec& a, const Int& s);
void zpoly_trim(IntVec& a);

}  // namespace cyclotors
