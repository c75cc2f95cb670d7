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

#include "cyclotors/elliptic.hpp"

#include <sstream>

#include "cyclotors/error.hpp"

namespace cyclotors {

EllipticCurve EllipticCurve::from_ainvs(const std::array<Rat, 5>& a, CycFieldPtr k) {
  std::array<CycElem, 5> e;
  for (int i = 0; i < 5; ++i) e[i] = CycElem(k, a[i]);
  return from_ainvs(e);
}

EllipticCurve EllipticCurve::from_ainvs(const std::array<CycElem, 5>& a) {
  auto d = std::make_shared<Data>();
  d->k = a[0].field();
  d->a = a;
  const CycElem &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  d->b2 = a1 * a1 + a2 * Rat(4);
  d->b4 = a4 * Rat(2) + a1 * a3;
  d->b6 = a3 * a3 + a6 * Rat(4);
  d->b8 = a1 * a1 * a6 + a2 * a6 * Rat(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  const CycElem &b2 = d->b2, &b4 = d->b4, &b6 = d->b6, &b8 = d->b8;
  d->c4 = b2 * b2 - b4 * Rat(24);
  d->c6 = -(b2 * b2 * b2) + b2 * b4 * Rat(36) - b6 * Rat(216);
  d->disc = -(b2 * b2 * b8) - b4 * b4 * b4 * Rat(8) - b6 * b6 * Rat(27) + b2 * b4 * b6 * Rat(9);
  if (d->disc.is_zero()) fail(ErrorCode::SingularCurve, "singular Weierstrass equation");
  d->j = d->c4 * d->c4 * d->c4 / d->disc;
  d->sa = d->c4 * Rat(-27);
  d->sb = d->c6 * Rat(-54);
  d->iso.u = CycElem(d->k, Rat(1, 6));
  d->iso.r = b2 * Rat(-1, 12);
  d->iso.s = a1 * Rat(-1, 2);
  d->iso.t = a1 * b2 * Rat(1, 24) - a3 * Rat(1, 2);
  EllipticCurve e;
  e.d_ = d;
  return e;
}

bool EllipticCurve::is_rational() const {
  for (const auto& x : d_->a)
    if (!x.is_rational()) return false;
  return true;
}

std::array<Rat, 5> EllipticCurve::rational_ainvs() const {
  std::array<Rat, 5> r;
  for (int i = 0; i < 5; ++i) r[i] = d_->a[i].rational_value();
  return r;
}

bool EllipticCurve::is_short() const {
  return d_->a[0].is_zero() && d_->a[1].is_zero() && d_->a[2].is_zero();
}

EllipticCurve EllipticCurve::short_model() const {
  CycElem z(d_->k);
  return from_ainvs({z, z, z, d_->sa, d_->sb});
}

EllipticCurve EllipticCurve::base_change(const CycFieldPtr& k) const {
  std::array<CycElem, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = embed(d_->a[i], k);
  return from_ainvs(a);
}

bool EllipticCurve::same_model(const EllipticCurve& o) const {
  return d_ == o.d_ || (field()->conductor() == o.field()->conductor() && d_->a == o.d_->a);
}

std::string EllipticCurve::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << d_->a[i].str();
  os << "]";
  return os.str();
}

Point::Point(EllipticCurve e, CycElem x, CycElem y)
    : e_(std::move(e)), inf_(false), x_(std::move(x)), y_(std::move(y)) {
  if (!on_curve(e_, x_, y_)) fail(ErrorCode::InvalidArgument, "point is not on the curve");
}

bool Point::operator<(const Point& o) const {
  if (inf_ != o.inf_) return inf_;
  if (inf_) return false;
  if (x_ != o.x_) return x_ < o.x_;
  return y_ < o.y_;
}

std::string Point::str() const {
  if (inf_) return "O";
  return "(" + x_.str() + " : " + y_.str() + ")";
}

EllipticCurve curve_from_ainvs(const std::array<Rat, 5>& a, CycFieldPtr k) {
  return EllipticCurve::from_ainvs(a, std::move(k));
}

bool on_curve(const EllipticCurve& e, const CycElem& x, const CycElem& y) {
  CycElem lhs = y * y + e.a(0) * x * y + e.a(2) * y;
  CycElem rhs = ((x + e.a(1)) * x + e.a(3)) * x + e.a(4);
  return lhs == rhs;
}

Point neg(const Point& p) {
  if (p.is_infinity()) return p;
  const auto& e = p.curve();
  return Point(e, p.x(), -p.y() - e.a(0) * p.x() - e.a(2));
}

Point add(const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto& e = p.curve();
  const CycElem &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  CycElem lam(e.field());
  if (x1 == x2) {
    CycElem s = y1 + y2 + e.a(0) * x2 + e.a(2);
    if (s.is_zero()) return Point(e);
    CycElem num = x1 * x1 * Rat(3) + e.a(1) * x1 * Rat(2) + e.a(3) - e.a(0) * y1;
    CycElem den = y1 * Rat(2) + e.a(0) * x1 + e.a(2);
    lam = num / den;
  } else {
    lam = (y2 - y1) / (x2 - x1);
  }
  CycElem nu = y1 - lam * x1;
  CycElem x3 = lam * lam + e.a(0) * lam - e.a(1) - x1 - x2;
  CycElem y3 = -(lam + e.a(0)) * x3 - nu - e.a(2);
  return Point(e, x3, y3);
}

Point sub(const Point& p, const Point& q) { return add(p, neg(q)); }

Point scalar_mul(const Int& k, const Point& p) {
  if (k < 0) return scalar_mul(-k, neg(p));
  Point r(p.curve());
  Point b = p;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = add(r, b);
    e >>= 1;
    if (e > 0) b = add(b, b);
  }
  return r;
}

std::optional<uint64_t> point_order(const Point& p, uint64_t cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "cap must be positive");
  Point q = p;
  for (uint64_t n = 1; n <= cap; ++n) {
    if (q.is_infinity()) return n;
    q = add(q, p);
  }
  return std::nullopt;
}

Point galois_apply(const GaloisElement& s, const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.curve(), galois_apply(s, p.x()), galois_apply(s, p.y()));
}

Point to_short_model(const Point& p, const EllipticCurve& sm) {
  if (p.is_infinity()) return Point(sm);
  const Iso& iso = p.curve().to_short();
  CycElem u2 = iso.u * iso.u;
  CycElem xs = (p.x() - iso.r) / u2;
  CycElem ys = (p.y() - iso.s * (p.x() - iso.r) - iso.t) / (u2 * iso.u);
  return Point(sm, xs, ys);
}

Point from_short_model(const Point& p, const EllipticCurve& orig) {
  if (p.is_infinity()) return Point(orig);
  const Iso& iso = orig.to_short();
  CycElem u2 = iso.u * iso.u;
  CycElem x = u2 * p.x() + iso.r;
  CycElem y = u2 * iso.u * p.y() + iso.s * u2 * p.x() + iso.t;
  return Point(orig, x, y);
}

EllipticCurve quadratic_twist(const EllipticCurve& e, const Int& d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "twist by zero");
  Int m = abs(d);
  for (Int q = 2; q * q <= m; ++q)
    if (m % (q * q) == 0) fail(ErrorCode::InvalidArgument, "twist parameter must be squarefree");
  Rat dq(d);
  CycElem z(e.field());
  return EllipticCurve::from_ainvs({z, z, z, e.short_a() * (dq * dq), e.short_b() * (dq * dq * dq)});
}

DivisionPolySet::DivisionPolySet(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
  cubic_ = {b_, a_, 0, 1};
}

const IntVec& DivisionPolySet::get(uint64_t m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  const Int &A = a_, &B = b_;
  IntVec r;
  if (m == 0) {
    r = {};
  } else if (m == 1 || m == 2) {
    r = {1};
  } else if (m == 3) {
    r = {-A * A, 12 * B, 6 * A, 0, 3};
  } else if (m == 4) {
    r = {-2 * A * A * A - 16 * B * B, -8 * A * B, -10 * A * A, 40 * B, 10 * A, 0, 2};
  } else {
    IntVec f2 = zpoly_mul(cubic_, cubic_);
    f2 = zpoly_scale(f2, 16);
    uint64_t k = m / 2;
    if (m % 2 == 1) {
      IntVec fk = get(k), fk1 = get(k + 1), fkm = get(k - 1), fk2 = get(k + 2);
      IntVec t1 = zpoly_mul(fk2, zpoly_mul(fk, zpoly_mul(fk, fk)));
      IntVec t2 = zpoly_mul(fkm, zpoly_mul(fk1, zpoly_mul(fk1, fk1)));
      if (k % 2 == 0) t1 = zpoly_mul(f2, t1);
      else t2 = zpoly_mul(f2, t2);
      r = zpoly_sub(t1, t2);
    } else {
      IntVec fk = get(k), fk1 = get(k + 1), fkm = get(k - 1), fk2 = get(k + 2), fkm2 = get(k - 2);
      IntVec t1 = zpoly_mul(fk2, zpoly_mul(fkm, fkm));
      IntVec t2 = zpoly_mul(fkm2, zpoly_mul(fk1, fk1));
      r = zpoly_mul(fk, zpoly_sub(t1, t2));
    }
  }
  zpoly_trim(r);
  return memo_[m] = r;
}

IntVec DivisionPolySet::f(uint64_t m) {
  std::lock_guard<std::mutex> lock(mu_);
  return get(m);
}

IntVec DivisionPolySet::psi_squared(uint64_t m) {
  IntVec fm = f(m);
  IntVec sq = zpoly_mul(fm, fm);
  if (m % 2 == 0) sq = zpoly_scale(zpoly_mul(sq, cubic_), 4);
  return sq;
}

IntVec DivisionPolySet::phi(uint64_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "phi_0 is undefined");
  IntVec x{0, 1};
  IntVec lo = f(m - 1), hi = f(m + 1);
  IntVec prod = zpoly_mul(lo, hi);
  if (m % 2 == 1) prod = zpoly_scale(zpoly_mul(prod, cubic_), 4);
  return zpoly_sub(zpoly_mul(x, psi_squared(m)), prod);
}

std::pair<Int, Int> integral_short_model(const EllipticCurve& e, Int* scale) {
  if (!e.is_rational()) fail(ErrorCode::InvalidArgument, "curve is not defined over Q");
  Rat a = e.short_a().rational_value(), b = e.short_b().rational_value();
  Int l = lcm(Int(a.get_den()), Int(b.get_den()));
  Int l2 = l * l, l4 = l2 * l2, l6 = l4 * l2;
  Rat as = a * Rat(l4), bs = b * Rat(l6);
  if (scale) *scale = l;
  return {as.get_num(), bs.get_num()};
}

PolyQ division_poly(const EllipticCurve& e, uint64_t m) {
  if (m == 0) return PolyQ(Rat(0));
  Int l;
  auto [a, b] = integral_short_model(e, &l);
  DivisionPolySet set(a, b);
  IntVec fm = set.f(m);
  if (l == 1) return polyq_from_ints(fm);
  // f_m(x) = lambda^(3[m even] - (m^2 - 1)) f'_m(lambda^2 x) over the scaled model.
  long expo = (m % 2 == 0 ? 3 : 0) - static_cast<long>(m * m - 1);
  std::vector<Rat> c(fm.size());
  Int l2 = l * l, pw = 1;
  for (size_t i = 0; i < fm.size(); ++i) {
    c[i] = Rat(fm[i] * pw);
    pw *= l2;
  }
  Int lp;
  mpz_pow_ui(lp.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(-expo));
  for (auto& x : c) x /= Rat(lp);
  return PolyQ(Rat(0), c);
}

ReductionData reduce_and_count(const EllipticCurve& e, uint64_t p, uint64_t f) {
  if (p < 5 || !is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "reduction needs a prime p >= 5");
  if (f < 1) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  Int l;
  auto [a, b] = integral_short_model(e, &l);
  Int disc = -16 * (4 * a * a * a + 27 * b * b);
  if (mpz_fdiv_ui(disc.get_mpz_t(), p) == 0 || mpz_fdiv_ui(l.get_mpz_t(), p) == 0)
    fail(ErrorCode::BadReduction, "bad reduction at " + std::to_string(p));
  uint64_t am = mpz_fdiv_ui(a.get_mpz_t(), p), bm = mpz_fdiv_ui(b.get_mpz_t(), p);
  std::vector<int8_t> chi(p, -1);
  chi[0] = 0;
  for (uint64_t y = 1; y < p; ++y) chi[y * y % p] = 1;
  long s = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t v = (mulmod_u64(mulmod_u64(x, x, p), x, p) + mulmod_u64(am, x, p) + bm) % p;
    s += chi[v];
  }
  ReductionData rd;
  rd.p = p;
  rd.f = f;
  rd.trace = -s;
  if (static_cast<double>(rd.trace) * rd.trace > 4.0 * static_cast<double>(p))
    throw std::logic_error("Hasse bound violated");
  Int ap(rd.trace), pp(static_cast<unsigned long>(p));
  Int s0 = 2, s1 = ap, pi = pp;
  for (uint64_t i = 1; i <= f; ++i) {
    rd.counts.push_back(pi + 1 - s1);
    Int s2 = ap * s1 - pp * s0;
    s0 = s1;
    s1 = s2;
    pi *= pp;
  }
  return rd;
}

}  // namespace cyclotors
