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

#include "cyclotors/arith.hpp"

#include "cyclotors/error.hpp"

namespace cyclotors {

IntMod::IntMod(const Int& v, const Int& m) : modulus(m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be at least 2");
  value = mod_floor(v, m);
}

Int parse_int(const std::string& s) {
  Int x;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty() || x.set_str(t, 10) != 0)
    fail(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  return x;
}

std::string to_string(const Int& x) { return x.get_str(10); }

std::string to_string(const Rat& x) { return x.get_str(10); }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::DivisionByZero, "not invertible modulo " + to_string(m));
  return r;
}

Int pow_mod(const Int& a, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int root_ceil(const Int& a, unsigned long n) {
  if (a <= 0) return 0;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (!exact) r += 1;
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::optional<Rat> rational_reconstruct(const IntMod& r, const Int& bound) {
  const Int& m = r.modulus;
  if (bound < 0 || 2 * bound * bound >= m)
    fail(ErrorCode::InvalidArgument, "rational_reconstruct needs 2*bound^2 < m");
  Int r0 = m, r1 = r.value, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Int g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  if (t1 < 0) { t1 = -t1; r1 = -r1; }
  return make_rat(r1, t1);
}

IntMod crt_combine(const std::vector<IntMod>& residues) {
  if (residues.empty()) fail(ErrorCode::InvalidArgument, "crt_combine of empty list");
  Int x = residues[0].value, m = residues[0].modulus;
  for (size_t i = 1; i < residues.size(); ++i) {
    const IntMod& r = residues[i];
    if (gcd(m, r.modulus) != 1)
      fail(ErrorCode::InvalidArgument, "crt_combine moduli not coprime");
    Int k = mod_floor((r.value - x) * inv_mod(m, r.modulus), r.modulus);
    x += k * m;
    m *= r.modulus;
  }
  return IntMod(x, m);
}

namespace {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int round_div(const Int& a, const Int& d) {
  Int q;
  Int num = 2 * a + d;
  Int den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

// Integral LLL with delta = 3/4 (Cohen, Algorithm 2.6.7). Indices are
// 1-based for d and lambda, with d[0] = 1.
Lattice lll_reduce(const Lattice& l) {
  std::vector<IntVec> b = l.basis;
  const size_t n = b.size();
  if (n == 0) return Lattice{b};
  const size_t dim = b[0].size();
  for (const auto& v : b)
    if (v.size() != dim) fail(ErrorCode::InvalidArgument, "lattice vectors differ in dimension");
  if (n == 1) {
    bool zero = true;
    for (const auto& c : b[0]) zero = zero && c == 0;
    if (zero) fail(ErrorCode::InvalidArgument, "lattice basis is dependent");
    return Lattice{b};
  }

  std::vector<Int> d(n + 1);
  std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1));
  auto B = [&](size_t i) -> IntVec& { return b[i - 1]; };

  d[0] = 1;
  d[1] = dot(B(1), B(1));
  if (d[1] == 0) fail(ErrorCode::InvalidArgument, "lattice basis is dependent");
  size_t k = 2, kmax = 1;

  auto red = [&](size_t kk, size_t ll) {
    Int two = 2 * abs(lam[kk][ll]);
    if (two <= d[ll]) return;
    Int q = round_div(lam[kk][ll], d[ll]);
    IntVec& bk = B(kk);
    const IntVec& bl = B(ll);
    for (size_t c = 0; c < dim; ++c) bk[c] -= q * bl[c];
    lam[kk][ll] -= q * d[ll];
    for (size_t i = 1; i < ll; ++i) lam[kk][i] -= q * lam[ll][i];
  };

  auto swap = [&](size_t kk) {
    std::swap(B(kk), B(kk - 1));
    for (size_t j = 1; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    Int lm = lam[kk][kk - 1];
    Int Bv = (d[kk - 2] * d[kk] + lm * lm) / d[kk - 1];
    for (size_t i = kk + 1; i <= kmax; ++i) {
      Int t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - lm * t) / d[kk - 1];
      lam[i][kk - 1] = (Bv * t + lm * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = Bv;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 1; j <= k; ++j) {
        Int u = dot(B(k), B(j));
        for (size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (d[k] == 0) fail(ErrorCode::InvalidArgument, "lattice basis is dependent");
        }
      }
    }
    red(k, k - 1);
    Int lhs = 4 * d[k] * d[k - 2];
    Int rhs = 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap(k);
      if (k > 2) --k;
      continue;
    }
    for (size_t ll = k - 1; ll-- > 1;) red(k, ll);
    ++k;
  }
  return Lattice{b};
}

Int determinant(std::vector<IntVec> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) fail(ErrorCode::DivisionByZero, "not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) { uint64_t t = a % b; a = b; b = t; }
  return a;
}

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : factor_u64(n)) r = r / p * (p - 1);
  return r;
}

uint64_t mul_order(uint64_t a, uint64_t n) {
  if (n == 1) return 1;
  if (gcd_u64(a % n, n) != 1) fail(ErrorCode::InvalidArgument, "order of non-unit");
  uint64_t ord = euler_phi(n);
  for (auto [p, e] : factor_u64(ord)) {
    for (int i = 0; i < e; ++i) {
      if (powmod_u64(a, ord / p, n) == 1 % n) ord /= p;
      else break;
    }
  }
  return ord;
}

int moebius(uint64_t n) {
  int m = 1;
  for (auto [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

}  // namespace cyclotors
