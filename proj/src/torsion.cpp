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

#include "cyclotors/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclotors/error.hpp"

namespace cyclotors {

namespace {

uint64_t ell_part(Int n, uint64_t l) {
  uint64_t r = 1;
  if (n == 0) return 0;
  while (mpz_fdiv_ui(n.get_mpz_t(), l) == 0) {
    n /= l;
    r *= l;
  }
  return r;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> r;
  for (auto [q, e] : factor_u64(n)) r.push_back(q);
  return r;
}

// All multiples of p in order, starting at O.
std::vector<Point> cyclic_span(const Point& p) {
  std::vector<Point> r{Point(p.curve())};
  Point q = p;
  while (!q.is_infinity()) {
    r.push_back(q);
    q = add(q, p);
  }
  return r;
}

std::set<Point> closure(std::set<Point> g, const std::vector<Point>& gens) {
  std::vector<Point> frontier(g.begin(), g.end());
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& s : frontier)
      for (const auto& t : gens) {
        Point u = add(s, t);
        if (g.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return g;
}

// x-coordinates of the l-division points of q solve phi_l - x(q) psi_l^2 = 0.
PolyK division_equation(DivisionPolySet& set, uint64_t l, const CycElem& xq) {
  const CycFieldPtr& k = xq.field();
  IntVec ph = set.phi(l), ps = set.psi_squared(l);
  size_t n = std::max(ph.size(), ps.size());
  std::vector<CycElem> c(n, CycElem(k));
  for (size_t i = 0; i < n; ++i) {
    CycElem v(k, i < ph.size() ? Rat(ph[i]) : Rat(0));
    if (i < ps.size()) v -= xq * Rat(ps[i]);
    c[i] = v;
  }
  return PolyK(CycElem(k), std::move(c));
}

CycElem cubic_at(const EllipticCurve& es, const CycElem& x) {
  return (x * x + es.a(3)) * x + es.a(4);
}

struct LPart {
  std::vector<Point> points;  // on the integral short model
  bool complete = true;
  std::string note;
};

LPart ell_primary_part(const EllipticCurve& es, DivisionPolySet& set, uint64_t l, uint64_t cap,
                       const RootOptions& opt) {
  LPart out;
  const CycFieldPtr& k = es.field();
  std::set<Point> g{Point(es)};
  std::vector<Point> gens;
  IntVec fl = l == 2 ? set.cubic() : set.f(l);
  RootResult rr = roots_in_cyclotomic(polyq_from_ints(fl), k, opt);
  out.complete = out.complete && rr.complete;
  for (const auto& x : rr.roots) {
    if (l == 2) {
      gens.emplace_back(es, x, CycElem(k));
      continue;
    }
    SqrtResult sq = sqrt_in_cyclotomic(cubic_at(es, x), opt);
    out.complete = out.complete && sq.complete;
    if (sq.root) gens.emplace_back(es, x, *sq.root);
  }
  g = closure(g, gens);
  while (g.size() < cap) {
    // Coset representatives of G / lG other than lG itself.
    std::set<Point> lg;
    for (const auto& p : g) lg.insert(scalar_mul(Int(l), p));
    std::set<Point> seen = lg;
    std::vector<Point> reps;
    for (const auto& p : g) {
      if (seen.count(p)) continue;
      reps.push_back(p);
      for (const auto& h : lg) seen.insert(add(p, h));
    }
    std::vector<Point> lifts;
    for (const auto& q : reps) {
      RootResult dr = roots_in_cyclotomic(division_equation(set, l, q.x()), opt);
      out.complete = out.complete && dr.complete;
      for (const auto& x : dr.roots) {
        SqrtResult sq = sqrt_in_cyclotomic(cubic_at(es, x), opt);
        out.complete = out.complete && sq.complete;
        if (!sq.root) continue;
        Point p(es, x, *sq.root);
        Point lp = scalar_mul(Int(l), p);
        if (lp == neg(q) && lp != q) p = neg(p), lp = q;
        if (lp == q) {
          lifts.push_back(p);
          break;
        }
      }
    }
    if (lifts.empty()) break;
    std::set<Point> g2 = closure(g, lifts);
    if (g2.size() == g.size()) break;
    g = std::move(g2);
  }
  if (g.size() > cap) throw std::logic_error("torsion exceeds its bound");
  out.points.assign(g.begin(), g.end());
  return out;
}

struct Shape {
  uint64_t a = 1, b = 1;
  std::optional<Point> ga, gb;
};

// Structure of a finite group of points all of whose orders divide n.
Shape shape_of(const std::vector<Point>& pts) {
  Shape s;
  uint64_t n = pts.size();
  std::map<Point, uint64_t> ord;
  for (const auto& p : pts) ord[p] = point_order(p, n).value();
  uint64_t expo = 1;
  for (const auto& [p, o] : ord) expo = std::lcm(expo, o);
  s.b = expo;
  s.a = n / expo;
  for (const auto& [p, o] : ord)
    if (o == s.b) {
      s.gb = p;
      break;
    }
  if (s.a > 1) {
    auto span = cyclic_span(*s.gb);
    std::set<Point> sb(span.begin(), span.end());
    for (const auto& [p, o] : ord) {
      if (o != s.a) continue;
      bool ok = true;
      Point q = p;
      for (uint64_t j = 1; j < s.a && ok; ++j, q = add(q, p)) ok = !sb.count(q);
      if (ok) {
        s.ga = p;
        break;
      }
    }
    if (!s.ga) throw std::logic_error("group of rank above two");
  }
  if (s.b % s.a != 0) throw std::logic_error("invariant factors do not divide");
  return s;
}

}  // namespace

std::string TorsionGroup::shape() const {
  if (a == 1) return "C" + std::to_string(b);
  return "C" + std::to_string(a) + "+C" + std::to_string(b);
}

uint64_t qab_cap(uint64_t l) {
  switch (l) {
    case 2: return 64;
    case 3: return 27;
    case 5: return 25;
    case 7: case 11: case 13: case 17: case 19: case 37: case 43: case 67: case 163: return l;
    default: return 1;
  }
}

TorsionBound torsion_bound(const EllipticCurve& e, uint64_t n, int prime_budget) {
  if (prime_budget < 2) fail(ErrorCode::InvalidArgument, "prime budget must be at least 2");
  if (n < 1) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  if (!e.is_rational()) fail(ErrorCode::InvalidArgument, "curve is not defined over Q");
  TorsionBound tb;
  tb.raw = 0;
  for (uint64_t p = 5; p < 2000 && static_cast<int>(tb.evidence.size()) < prime_budget; ++p) {
    if (!is_prime_u64(p) || n % p == 0) continue;
    uint64_t f = n <= 2 ? 1 : mul_order(p % n, n);
    ReductionData rd;
    try {
      rd = reduce_and_count(e, p, f);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::BadReduction) continue;
      throw;
    }
    tb.evidence.push_back({p, f, rd.counts.back()});
    mpz_gcd(tb.raw.get_mpz_t(), tb.raw.get_mpz_t(), rd.counts.back().get_mpz_t());
  }
  if (tb.evidence.empty()) fail(ErrorCode::Configuration, "no eligible primes below 2000");
  tb.bound = 1;
  Int r = tb.raw;
  for (uint64_t l = 2; r > 1 && l < 2000; ++l) {
    if (!is_prime_u64(l)) continue;
    uint64_t part = ell_part(r, l);
    if (part == 1) continue;
    r /= part;
    tb.bound *= std::min<uint64_t>(part, qab_cap(l));
  }
  return tb;
}

namespace {

struct ShortCtx {
  CycFieldPtr k;
  EllipticCurve ek;  // input model over K
  EllipticCurve sm;  // y^2 = x^3 - 27 c4 x - 54 c6 over K
  EllipticCurve es;  // integral rescaling of sm
  Int lambda;
  std::unique_ptr<DivisionPolySet> set;

  ShortCtx(const EllipticCurve& e, uint64_t n)
      : k(CycField::get(n)), ek(e.base_change(k)), sm(ek.short_model()), es(sm) {
    auto [a, b] = integral_short_model(e, &lambda);
    CycElem z(k);
    es = EllipticCurve::from_ainvs({z, z, z, CycElem(k, Rat(a)), CycElem(k, Rat(b))});
    set = std::make_unique<DivisionPolySet>(a, b);
  }

  Point back(const Point& p) const {
    if (p.is_infinity()) return Point(ek);
    Rat l2 = Rat(lambda * lambda), l3 = l2 * Rat(lambda);
    Point ps(sm, p.x() * (1 / l2), p.y() * (1 / l3));
    return from_short_model(ps, ek);
  }
};

}  // namespace

PointsResult torsion_points_of_order(const EllipticCurve& e, uint64_t m, const CycFieldPtr& k,
                                     const RootOptions& opt) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
  ShortCtx c(e, k->conductor());
  PointsResult out;
  if (m == 1) {
    out.points.push_back(Point(c.ek));
    return out;
  }
  std::vector<Point> found;
  if (m == 2) {
    RootResult rr = roots_in_cyclotomic(polyq_from_ints(c.set->cubic()), k, opt);
    out.complete = rr.complete;
    for (const auto& x : rr.roots) found.emplace_back(c.es, x, CycElem(k));
  } else {
    RootOptions o = opt;
    for (uint64_t l : prime_divisors(m))
      if (m / l >= 3) o.exclude.push_back(polyq_from_ints(c.set->f(m / l)));
    RootResult rr = roots_in_cyclotomic(polyq_from_ints(c.set->f(m)), k, o);
    out.complete = rr.complete;
    for (const auto& x : rr.roots) {
      CycElem v = cubic_at(c.es, x);
      if (v.is_zero()) continue;
      SqrtResult sq = sqrt_in_cyclotomic(v, opt);
      out.complete = out.complete && sq.complete;
      if (!sq.root) continue;
      Point p(c.es, x, *sq.root);
      bool exact = scalar_mul(Int(m), p).is_infinity();
      for (uint64_t l : prime_divisors(m)) exact = exact && !scalar_mul(Int(m / l), p).is_infinity();
      if (exact) {
        found.push_back(p);
        found.push_back(neg(p));
      }
    }
  }
  for (const auto& p : found) out.points.push_back(c.back(p));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

TorsionGroup group_from_points(const std::vector<Point>& pts, uint64_t conductor) {
  TorsionGroup g;
  g.conductor = conductor;
  Shape s = shape_of(pts);
  g.a = s.a;
  g.b = s.b;
  if (s.ga) g.gen_a.push_back(*s.ga);
  if (s.gb && s.b > 1) g.gen_b.push_back(*s.gb);
  g.points = pts;
  std::sort(g.points.begin(), g.points.end());
  return g;
}

TorsionGroup torsion_structure(const EllipticCurve& e, uint64_t n, const TorsionOptions& opt) {
  if (!e.is_rational()) fail(ErrorCode::InvalidArgument, "curve is not defined over Q");
  TorsionGroup g;
  g.conductor = n;
  g.bound = torsion_bound(e, n, opt.prime_budget);
  ShortCtx c(e, n);
  uint64_t bnd = g.bound.bound.get_ui();
  std::vector<std::vector<Point>> parts;
  Point ga(c.es), gb(c.es);
  for (uint64_t l : prime_divisors(bnd)) {
    LPart lp = ell_primary_part(c.es, *c.set, l, ell_part(Int(bnd), l), opt.roots);
    g.complete = g.complete && lp.complete;
    if (lp.points.size() == 1) continue;
    Shape s = shape_of(lp.points);
    g.a *= s.a;
    g.b *= s.b;
    if (s.ga) ga = add(ga, *s.ga);
    gb = add(gb, *s.gb);
    parts.push_back(std::move(lp.points));
  }
  if (!contains_cyclotomic(g.a, n)) throw std::logic_error("Weil pairing violated");
  if (g.a > 1) g.gen_a.push_back(c.back(ga));
  if (g.b > 1) g.gen_b.push_back(c.back(gb));
  if (g.a * g.b <= 10000) {
    std::vector<Point> all{Point(c.es)};
    for (const auto& part : parts) {
      std::vector<Point> next;
      for (const auto& p : all)
        for (const auto& q : part) next.push_back(add(p, q));
      all = std::move(next);
    }
    for (const auto& p : all) g.points.push_back(c.back(p));
    std::sort(g.points.begin(), g.points.end());
  }
  std::ostringstream note;
  note << "bound " << g.bound.bound.get_str() << " (raw " << g.bound.raw.get_str() << ")";
  g.notes.push_back(note.str());
  if (!g.complete) g.notes.push_back("inconclusive: a root search hit its precision cap");
  return g;
}

TorsionGroup torsion_over_subfield(const TorsionGroup& full, const std::vector<GaloisElement>& h) {
  if (full.points.size() != full.order()) fail(ErrorCode::InvalidArgument, "torsion group too large to enumerate");
  std::vector<Point> fixed;
  for (const auto& p : full.points) {
    bool ok = true;
    for (const auto& s : h) ok = ok && galois_apply(s, p) == p;
    if (ok) fixed.push_back(p);
  }
  TorsionGroup g = group_from_points(fixed, full.conductor);
  g.complete = full.complete;
  g.bound = full.bound;
  return g;
}

TorsionGroup torsion_over_subfield(const EllipticCurve& e, uint64_t n, const std::vector<GaloisElement>& h,
                                   const TorsionOptions& opt) {
  for (const auto& s : h)
    if (s.field->conductor() != n) fail(ErrorCode::InvalidArgument, "subgroup lives in another field");
  return torsion_over_subfield(torsion_structure(e, n, opt), h);
}

uint64_t point_field_degree(const Point& p) {
  if (p.is_infinity()) return 1;
  std::set<Point> orbit;
  for (const auto& s : galois_group(p.curve().field())) orbit.insert(galois_apply(s, p));
  return orbit.size();
}

TorsionGroup torsion_mu_infinity(const EllipticCurve& e, uint64_t p, const TorsionOptions& opt) {
  if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "p must be prime");
  uint64_t n = p == 2 ? 16 : p == 3 ? 27 : p;
  return torsion_structure(e, n, opt);
}

}  // namespace cyclotors
