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

#include "cyclotors/roots.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "cyclotors/error.hpp"

namespace cyclotors {

namespace {

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, uint64_t p) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "F_p polynomial division by zero");
  fp_trim(a);
  if (a.size() < b.size()) return {{}, a};
  uint64_t inv = invmod_u64(b.back(), p);
  size_t db = b.size() - 1;
  FpPoly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    uint64_t c = mulmod_u64(a[i], inv, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] = subm(a[i - db + j], mulmod_u64(c, b[j], p), p);
  }
  a.resize(db);
  fp_trim(a);
  fp_trim(q);
  return {q, a};
}

FpPoly fp_monic(FpPoly a, uint64_t p) {
  fp_trim(a);
  if (a.empty()) return a;
  uint64_t inv = invmod_u64(a.back(), p);
  for (auto& c : a) c = mulmod_u64(c, inv, p);
  return a;
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& f, uint64_t p) {
  FpPoly r{1};
  base = fp_rem(base, f, p);
  while (e) {
    if (e & 1) r = fp_rem(fp_mul(r, base, p), f, p);
    e >>= 1;
    if (e) base = fp_rem(fp_mul(base, base, p), f, p);
  }
  return r;
}

void fp_split(const FpPoly& g, uint64_t p, std::mt19937_64& rng, std::vector<uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(mulmod_u64(p - g[0], invmod_u64(g[1], p), p));
    return;
  }
  for (;;) {
    uint64_t a = rng() % p;
    FpPoly h = fp_powmod(FpPoly{a, 1}, (p - 1) / 2, g, p);
    if (h.empty()) h = {p - 1};
    else h[0] = subm(h[0], 1, p);
    fp_trim(h);
    FpPoly d = fp_gcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      fp_split(d, p, rng, out);
      fp_split(fp_divmod(g, d, p).first, p, rng, out);
      return;
    }
  }
}

Int mod_pow(const Int& p, unsigned k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

// Horner evaluation of integer coefficients modulo m.
Int eval_mod(const IntVec& a, const Int& x, const Int& m) {
  Int acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = mod_floor(acc * x + a[i], m);
  return acc;
}

Int eval_deriv_mod(const IntVec& a, const Int& x, const Int& m) {
  Int acc = 0;
  for (size_t i = a.size(); i-- > 1;) acc = mod_floor(acc * x + a[i] * static_cast<unsigned long>(i), m);
  return acc;
}

// Newton lifting of a simple root r0 of a (given modulo p^k) to p^k.
Int lift_root(const IntVec& a, const Int& p, unsigned k, const Int& r0) {
  Int r = r0;
  unsigned e = 1;
  while (e < k) {
    e = std::min(2 * e, k);
    Int m = mod_pow(p, e);
    Int fx = eval_mod(a, r, m);
    Int dfx = eval_deriv_mod(a, r, m);
    if (mod_floor(dfx, p) == 0) fail(ErrorCode::SingularRoot, "root is not simple");
    r = mod_floor(r - fx * inv_mod(dfx, m), m);
  }
  return r;
}

// tr(G^{-1}) for the trace form G_ij = Tr(zeta^(i-j)) of Q(zeta_N).
Rat trace_form_inverse_trace(uint64_t n) {
  static std::mutex mu;
  static std::map<uint64_t, Rat> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  size_t d = euler_phi(n);
  auto trace = [&](int64_t e) -> Rat {
    int64_t r = ((e % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) % static_cast<int64_t>(n);
    uint64_t g = gcd_u64(static_cast<uint64_t>(r), n);
    if (r == 0) g = n;
    uint64_t q = n / g;
    return Rat(moebius(q) * static_cast<long>(euler_phi(n) / euler_phi(q)));
  };
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(2 * d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) a[i][j] = trace(static_cast<int64_t>(i) - static_cast<int64_t>(j));
    a[i][d + i] = 1;
  }
  for (size_t c = 0; c < d; ++c) {
    size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    Rat inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = 0; j < 2 * d; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Rat t = 0;
  for (size_t i = 0; i < d; ++i) t += a[i][d + i];
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = t;
  return t;
}

uint64_t primitive_root_of_unity(uint64_t n, uint64_t p) {
  if (n == 1) return 1;
  auto fac = factor_u64(n);
  for (uint64_t h = 2; h < p; ++h) {
    uint64_t w = powmod_u64(h, (p - 1) / n, p);
    bool ok = true;
    for (auto [q, e] : fac) ok = ok && powmod_u64(w, n / q, p) != 1;
    if (ok) return w;
  }
  fail(ErrorCode::BadPrime, "no primitive root of unity");
}

struct Problem {
  CycFieldPtr k;
  size_t d = 1;
  uint64_t n = 1;
  std::vector<IntVec> coef;  // numerator vectors, index = power of x
  Int den = 1;               // common denominator of the coefficients
  Int dmul = 1;              // dmul * beta is integral for every root beta
  Int bound = 1;             // |sigma(beta)| <= bound for every embedding
  std::vector<CycElem> exact;
  long deg() const { return static_cast<long>(coef.size()) - 1; }
};

Problem make_problem(const PolyQ& f, const CycFieldPtr& k) {
  Problem pr;
  pr.k = k;
  pr.d = k->degree();
  pr.n = k->conductor();
  IntVec z = primitive_part(f);
  for (const auto& c : z) {
    IntVec v(pr.d, 0);
    v[0] = c;
    pr.coef.push_back(v);
    pr.exact.emplace_back(k, Rat(c));
  }
  pr.den = 1;
  Int lead = abs(z.back());
  pr.dmul = lead;
  Int m = 1;
  size_t n = z.size() - 1;
  for (size_t i = 0; i < n; ++i) {
    Rat ratio(abs(z[i]), lead);
    m = std::max(m, root_ceil(ceil_rat(ratio), static_cast<unsigned long>(n - i)));
  }
  pr.bound = 2 * m;
  return pr;
}

Problem make_problem(const PolyK& g) {
  Problem pr;
  pr.k = g.zero().field();
  pr.d = pr.k->degree();
  pr.n = pr.k->conductor();
  PolyK f = g.monic();
  Int l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.den());
  pr.den = l;
  pr.dmul = l;
  for (const auto& c : f.coeffs()) {
    IntVec v = c.num();
    Int s = l / c.den();
    for (auto& x : v) x *= s;
    pr.coef.push_back(v);
    pr.exact.push_back(CycElem::from_ints(pr.k, v, 1));
  }
  Int m = 1;
  size_t n = pr.coef.size() - 1;
  for (size_t i = 0; i < n; ++i) {
    Int a = 0;
    for (const auto& x : pr.coef[i]) a += abs(x);
    m = std::max(m, root_ceil(ceil_rat(Rat(a, l)), static_cast<unsigned long>(n - i)));
  }
  pr.bound = 2 * m;
  return pr;
}

bool exact_root(const Problem& pr, const CycElem& beta) {
  CycElem acc(pr.k);
  for (size_t i = pr.exact.size(); i-- > 0;) acc = acc * beta + pr.exact[i];
  return acc.is_zero();
}

// Reduction of the coefficient vectors at zeta -> w modulo m.
IntVec reduce_at(const Problem& pr, const IntVec& wpow, const Int& m) {
  Int linv = inv_mod(pr.den, m);
  IntVec a;
  a.reserve(pr.coef.size());
  for (const auto& v : pr.coef) {
    Int s = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += v[j] * wpow[j];
    a.push_back(mod_floor(s * linv, m));
  }
  return a;
}

IntVec powers_mod(const Int& w, size_t d, const Int& m) {
  IntVec out(d);
  Int cur = 1;
  for (size_t j = 0; j < d; ++j) {
    out[j] = cur;
    cur = mod_floor(cur * w, m);
  }
  return out;
}

struct PrimeChoice {
  uint64_t p = 0;
  uint64_t w = 0;
  std::vector<uint64_t> residues;
};

// Screens p; returns false if p is unusable.
bool screen_prime(const Problem& pr, const std::vector<PolyQ>& exclude, uint64_t p, PrimeChoice& out) {
  if (mpz_fdiv_ui(pr.den.get_mpz_t(), p) == 0) return false;
  uint64_t w = primitive_root_of_unity(pr.n, p);
  Int pp(static_cast<unsigned long>(p));
  IntVec wp = powers_mod(Int(static_cast<unsigned long>(w)), pr.d, pp);
  IntVec a = reduce_at(pr, wp, pp);
  FpPoly fb = fp_reduce(a, p);
  if (static_cast<long>(fb.size()) - 1 != pr.deg()) return false;
  FpPoly g = fp_gcd(fb, fp_derivative(fb, p), p);
  if (g.size() > 1) return false;
  std::vector<FpPoly> ex;
  for (const auto& e : exclude) {
    IntVec z = primitive_part(e);
    FpPoly eb = fp_reduce(z, p);
    if (eb.size() != z.size()) return false;
    ex.push_back(eb);
  }
  out.p = p;
  out.w = w;
  out.residues.clear();
  for (uint64_t r : fp_roots(fb, p)) {
    bool skip = false;
    for (const auto& eb : ex) skip = skip || fp_eval(eb, r, p) == 0;
    if (!skip) out.residues.push_back(r);
  }
  return true;
}

struct Filter {
  uint64_t q = 0;
  IntVec wpow;
  FpPoly fq;
};

Filter make_filter(const Problem& pr, uint64_t after) {
  Filter flt;
  uint64_t q = after + pr.n - (after % pr.n) + 1;
  for (;; q += pr.n) {
    if (!is_prime_u64(q) || mpz_fdiv_ui(pr.den.get_mpz_t(), q) == 0) continue;
    uint64_t w = primitive_root_of_unity(pr.n, q);
    Int qq(static_cast<unsigned long>(q));
    IntVec wp = powers_mod(Int(static_cast<unsigned long>(w)), pr.d, qq);
    FpPoly fb = fp_reduce(reduce_at(pr, wp, qq), q);
    if (static_cast<long>(fb.size()) - 1 != pr.deg()) continue;
    flt.q = q;
    flt.wpow = wp;
    flt.fq = fb;
    return flt;
  }
}

bool passes_filter(const Filter& flt, const IntVec& c, const Int& t) {
  uint64_t q = flt.q;
  uint64_t tm = mpz_fdiv_ui(t.get_mpz_t(), q);
  if (tm == 0) return true;
  Int s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += c[j] * flt.wpow[j];
  uint64_t x = mulmod_u64(mpz_fdiv_ui(s.get_mpz_t(), q), invmod_u64(tm, q), q);
  return fp_eval(flt.fq, x, q) == 0;
}

// Smallest k with p^(2k) > X^d for the reconstruction certificate.
unsigned certified_precision(const Problem& pr, uint64_t p) {
  Int d(static_cast<unsigned long>(pr.d));
  Int t = ceil_rat(trace_form_inverse_trace(pr.n));
  Int m2 = pr.bound * pr.bound;
  Int d2 = pr.dmul * pr.dmul;
  Int s0 = d2 * (d * m2 * t + 1);
  Int two_d;
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, pr.d);
  Int x = d2 * (d + m2) * two_d * s0;
  Int xd;
  mpz_pow_ui(xd.get_mpz_t(), x.get_mpz_t(), pr.d);
  double bits = static_cast<double>(mpz_sizeinbase(xd.get_mpz_t(), 2));
  unsigned k = static_cast<unsigned>(std::floor(bits / (2.0 * std::log2(static_cast<double>(p))))) ;
  if (k == 0) k = 1;
  Int pp(static_cast<unsigned long>(p));
  while (mod_pow(pp, 2 * k) <= xd) ++k;
  while (k > 1 && mod_pow(pp, 2 * (k - 1)) > xd) --k;
  return k;
}

std::optional<CycElem> reconstruct(const Problem& pr, const PrimeChoice& pc, uint64_t rho0, unsigned k,
                                   const Filter& flt) {
  Int p(static_cast<unsigned long>(pc.p));
  Int pk = mod_pow(p, k);
  const IntVec& phi = pr.k->minpoly();
  Int w = lift_root(phi, p, k, Int(static_cast<unsigned long>(pc.w)));
  IntVec wp = powers_mod(w, pr.d, pk);
  IntVec a = reduce_at(pr, wp, pk);
  Int rho = lift_root(a, p, k, Int(static_cast<unsigned long>(rho0)));
  const size_t dim = pr.d + 1;
  std::vector<IntVec> basis(dim, IntVec(dim, 0));
  basis[0][0] = pk;
  for (size_t i = 1; i < pr.d; ++i) {
    basis[i][0] = mod_floor(-wp[i], pk);
    basis[i][i] = 1;
  }
  basis[pr.d][0] = rho;
  basis[pr.d][pr.d] = 1;
  auto red = lll_reduce(Lattice{basis}).basis;
  for (size_t v = 0; v < std::min<size_t>(2, red.size()); ++v) {
    const IntVec& b = red[v];
    Int t = b[pr.d];
    if (t == 0 || mpz_fdiv_ui(t.get_mpz_t(), pc.p) == 0) continue;
    IntVec c(b.begin(), b.begin() + static_cast<long>(pr.d));
    if (!passes_filter(flt, c, t)) continue;
    CycElem beta = CycElem::from_ints(pr.k, c, t);
    if (exact_root(pr, beta)) return beta;
  }
  return std::nullopt;
}

RootResult solve(Problem pr, const RootOptions& opt, const std::function<Problem()>& squarefree) {
  RootResult res;
  if (pr.deg() < 0) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  if (pr.deg() == 0) return res;
  if (pr.deg() == 1 && opt.exclude.empty()) {
    CycElem beta = -(pr.exact[0] / pr.exact[1]);
    res.roots.push_back(beta);
    res.note = "linear";
    return res;
  }
  uint64_t lo = 2 * pr.n * static_cast<uint64_t>(pr.deg()) + 1;
  uint64_t p = lo + (pr.n - lo % pr.n) % pr.n + 1;
  if (p < lo) p += pr.n;
  std::vector<PrimeChoice> found;
  int failures = 0;
  for (; static_cast<int>(found.size()) < opt.prime_candidates; p += pr.n) {
    if (!is_prime_u64(p)) continue;
    PrimeChoice pc;
    if (!screen_prime(pr, opt.exclude, p, pc)) {
      if (++failures >= 40 && found.empty()) {
        if (!squarefree) fail(ErrorCode::InvalidArgument, "polynomial is not squarefree");
        Problem sq = squarefree();
        return solve(sq, opt, nullptr);
      }
      continue;
    }
    found.push_back(pc);
    if (pc.residues.empty()) break;
  }
  const PrimeChoice* best = &found[0];
  for (const auto& pc : found)
    if (pc.residues.size() < best->residues.size()) best = &pc;
  res.prime = best->p;
  res.residues = best->residues.size();
  if (best->residues.empty()) {
    res.note = "no residues";
    return res;
  }
  unsigned kcert = certified_precision(pr, best->p);
  double lp = std::log2(static_cast<double>(best->p));
  unsigned kcap = static_cast<unsigned>(std::floor(static_cast<double>(opt.precision_cap_bits) / lp));
  if (kcap < 1) kcap = 1;
  unsigned kfinal = std::min(kcert, kcap);
  unsigned k0 = std::max<unsigned>(1, static_cast<unsigned>(std::ceil(60.0 * std::log2(10.0) / lp)));
  Filter flt = make_filter(pr, best->p);
  for (uint64_t rho : best->residues) {
    std::optional<CycElem> got;
    unsigned k = std::min(k0, kfinal);
    for (;;) {
      got = reconstruct(pr, *best, rho, k, flt);
      res.max_precision = std::max(res.max_precision, k);
      if (got || k >= kfinal) break;
      k = std::min(2 * k, kfinal);
    }
    if (got) {
      bool dup = false;
      for (const auto& r : res.roots) dup = dup || r == *got;
      if (!dup) res.roots.push_back(*got);
    } else if (kcert > kcap) {
      res.complete = false;
    }
  }
  std::ostringstream os;
  os << "p=" << best->p << " residues=" << best->residues.size() << " k_cert=" << kcert;
  if (!res.complete) os << " exceeds cap k=" << kcap;
  res.note = os.str();
  std::sort(res.roots.begin(), res.roots.end());
  return res;
}

}  // namespace

FpPoly fp_reduce(const IntVec& f, uint64_t p) {
  FpPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulmod_u64(a[i], b[j], p), p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p) { return fp_divmod(std::move(a), b, p).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod_u64(a[i], i % p, p);
  fp_trim(r);
  return r;
}

FpPoly fp_powmod_x(uint64_t e, const FpPoly& f, uint64_t p) { return fp_powmod(FpPoly{0, 1}, e, f, p); }

uint64_t fp_eval(const FpPoly& f, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = addm(mulmod_u64(acc, x, p), f[i], p);
  return acc;
}

std::vector<uint64_t> fp_roots(const FpPoly& f0, uint64_t p) {
  FpPoly f = f0;
  fp_trim(f);
  std::vector<uint64_t> out;
  if (f.size() <= 1) return out;
  if (p < 64) {
    for (uint64_t x = 0; x < p; ++x)
      if (fp_eval(f, x, p) == 0) out.push_back(x);
    return out;
  }
  FpPoly xp = fp_powmod_x(p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = subm(xp[1], 1, p);
  fp_trim(xp);
  FpPoly g = fp_gcd(f, xp, p);
  std::mt19937_64 rng(0x5eed);
  fp_split(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMod> roots_mod_p(const PolyQ& f, uint64_t p) {
  if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "roots_mod_p needs a prime");
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  for (const auto& c : f.coeffs())
    if (mpz_fdiv_ui(c.get_den_mpz_t(), p) == 0)
      fail(ErrorCode::BadPrime, "p divides a denominator");
  if (mpz_fdiv_ui(f.lead().get_num_mpz_t(), p) == 0) fail(ErrorCode::BadPrime, "p divides the leading coefficient");
  FpPoly fb(f.coeffs().size());
  for (size_t i = 0; i < fb.size(); ++i) {
    const Rat& c = f.coeffs()[i];
    uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    fb[i] = mulmod_u64(num, invmod_u64(den, p), p);
  }
  fp_trim(fb);
  std::vector<IntMod> out;
  Int m(static_cast<unsigned long>(p));
  for (uint64_t r : fp_roots(fb, p)) out.emplace_back(Int(static_cast<unsigned long>(r)), m);
  return out;
}

PadicRoot hensel_lift(const PolyQ& f, const PadicRoot& r, unsigned target_k) {
  if (r.k < 1 || target_k < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  Int pk = mod_pow(r.p, std::max(target_k, r.k));
  IntVec a;
  for (const auto& c : f.coeffs()) a.push_back(mod_floor(c.get_num() * inv_mod(c.get_den(), pk), pk));
  if (eval_mod(a, r.value, mod_pow(r.p, r.k)) != 0) fail(ErrorCode::InvalidArgument, "not a root at the given precision");
  if (eval_deriv_mod(a, r.value, r.p) == 0) fail(ErrorCode::SingularRoot, "root is not simple");
  PadicRoot out;
  out.p = r.p;
  out.k = std::max(target_k, r.k);
  out.value = lift_root(a, r.p, out.k, mod_floor(r.value, r.p));
  if (out.k > r.k) {
    out.value = mod_floor(out.value, pk);
  }
  return out;
}

RootResult roots_in_cyclotomic(const PolyQ& f, const CycFieldPtr& k, const RootOptions& opt) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  return solve(make_problem(f, k), opt, [&]() {
    PolyQ g = poly_gcd(f, f.derivative());
    return make_problem(f / g, k);
  });
}

RootResult roots_in_cyclotomic(const PolyK& f, const RootOptions& opt) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  return solve(make_problem(f), opt, [&]() {
    PolyK g = poly_gcd(f, f.derivative());
    return make_problem(f / g);
  });
}

SqrtResult sqrt_in_cyclotomic(const CycElem& v, const RootOptions& opt) {
  SqrtResult out;
  const auto& k = v.field();
  if (v.is_zero()) {
    out.root = CycElem(k);
    return out;
  }
  PolyK f(CycElem(k), {-v, CycElem(k), CycElem(k, 1)});
  RootResult r = roots_in_cyclotomic(f, opt);
  out.complete = r.complete;
  if (!r.roots.empty()) out.root = r.roots.back();
  return out;
}

}  // namespace cyclotors
