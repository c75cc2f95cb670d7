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

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cyclotors/cyclo.hpp"
#include "cyclotors/poly.hpp"

namespace cyclotors {

// (x, y) = (u^2 x' + r, u^3 y' + s u^2 x' + t).
struct Iso {
  CycElem u, r, s, t;
};

class EllipticCurve {
 public:
  static EllipticCurve from_ainvs(const std::array<Rat, 5>& a, CycFieldPtr k = CycField::rationals());
  static EllipticCurve from_ainvs(const std::array<CycElem, 5>& a);

  const CycFieldPtr& field() const { return d_->k; }
  // a1, a2, a3, a4, a6 at indices 0..4.
  const CycElem& a(int i) const { return d_->a[i]; }
  const std::array<CycElem, 5>& ainvs() const { return d_->a; }
  bool is_rational() const;
  std::array<Rat, 5> rational_ainvs() const;
  bool is_short() const;
  const CycElem& b2() const { return d_->b2; }
  const CycElem& b4() const { return d_->b4; }
  const CycElem& b6() const { return d_->b6; }
  const CycElem& b8() const { return d_->b8; }
  const CycElem& c4() const { return d_->c4; }
  const CycElem& c6() const { return d_->c6; }
  const CycElem& discriminant() const { return d_->disc; }
  const CycElem& j_invariant() const { return d_->j; }
  // y^2 = x^3 + A x + B with A = -27 c4, B = -54 c6.
  const CycElem& short_a() const { return d_->sa; }
  const CycElem& short_b() const { return d_->sb; }
  const Iso& to_short() const { return d_->iso; }
  EllipticCurve short_model() const;
  EllipticCurve base_change(const CycFieldPtr& k) const;
  bool same_model(const EllipticCurve& o) const;
  std::string str() const;

 private:
  EllipticCurve() = default;
  struct Data {
    CycFieldPtr k;
    std::array<CycElem, 5> a;
    CycElem b2, b4, b6, b8, c4, c6, disc, j, sa, sb;
    Iso iso;
  };
  std::shared_ptr<const Data> d_;
};

class Point {
 public:
  explicit Point(EllipticCurve e) : e_(std::move(e)), inf_(true), x_(e_.field()), y_(e_.field()) {}
  Point(EllipticCurve e, CycElem x, CycElem y);

  const EllipticCurve& curve() const { return e_; }
  bool is_infinity() const { return inf_; }
  const CycElem& x() const { return x_; }
  const CycElem& y() const { return y_; }
  bool operator==(const Point& o) const { return inf_ == o.inf_ && (inf_ || (x_ == o.x_ && y_ == o.y_)); }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const;
  std::string str() const;

 private:
  EllipticCurve e_;
  bool inf_;
  CycElem x_, y_;
};

EllipticCurve curve_from_ainvs(const std::array<Rat, 5>& a, CycFieldPtr k = CycField::rationals());
bool on_curve(const EllipticCurve& e, const CycElem& x, const CycElem& y);
Point neg(const Point& p);
Point add(const Point& p, const Point& q);
Point sub(const Point& p, const Point& q);
Point scalar_mul(const Int& k, const Point& p);
std::optional<uint64_t> point_order(const Point& p, uint64_t cap);
Point galois_apply(const GaloisElement& s, const Point& p);
// Moves points between a curve and its short model.
Point to_short_model(const Point& p, const EllipticCurve& short_model);
Point from_short_model(const Point& p, const EllipticCurve& original);

EllipticCurve quadratic_twist(const EllipticCurve& e, const Int& d);

// f_m in the odd-part convention: psi_m = f_m for odd m, psi_m = 2y f_m for even m,
// on y^2 = x^3 + A x + B with integral A, B.
class DivisionPolySet {
 public:
  DivisionPolySet(Int a, Int b);
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  IntVec f(uint64_t m);
  // psi_m^2 as a polynomial in x.
  IntVec psi_squared(uint64_t m);
  // Numerator of x(mP): x psi_m^2 - psi_{m-1} psi_{m+1}.
  IntVec phi(uint64_t m);
  const IntVec& cubic() const { return cubic_; }

 private:
  const IntVec& get(uint64_t m);
  Int a_, b_;
  IntVec cubic_;
  std::mutex mu_;
  std::map<uint64_t, IntVec> memo_;
};

// Division polynomial of E in the odd-part convention, for E over Q, on the
// short model y^2 = x^3 + A x + B of E.
PolyQ division_poly(const EllipticCurve& e, uint64_t m);

struct ReductionData {
  uint64_t p = 0;
  uint64_t f = 1;
  long trace = 0;
  std::vector<Int> counts;  // #E(F_{p^i}) for i = 1..f
};

ReductionData reduce_and_count(const EllipticCurve& e, uint64_t p, uint64_t f);
// Integral short model coefficients (A, B) for E over Q, and the scaling used.
std::pair<Int, Int> integral_short_model(const EllipticCurve& e, Int* scale = nullptr);

}  // namespace cyclotors
