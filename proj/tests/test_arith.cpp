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

#include <random>

#include "cyclotors/arith.hpp"
#include "cyclotors/error.hpp"
#include "doctest.h"

using namespace cyclotors;

namespace {

// Exhaustive search for p/q with |p|, 0 < q <= bound and p = q*r mod m.
std::vector<Rat> brute_reconstruct(long r, long m, long bound) {
  std::vector<Rat> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p)
      if (((p - q * r) % m + m) % m == 0) {
        Rat x(p, q);
        x.canonicalize();
        bool seen = false;
        for (auto& y : out) seen = seen || y == x;
        if (!seen) out.push_back(x);
      }
  return out;
}

long brute_crt(const std::vector<std::pair<long, long>>& sys) {
  long prod = 1;
  for (auto& [r, m] : sys) prod *= m;
  for (long x = 0; x < prod; ++x) {
    bool ok = true;
    for (auto& [r, m] : sys) ok = ok && x % m == r;
    if (ok) return x;
  }
  return -1;
}

}  // namespace

TEST_CASE("rational_reconstruct examples") {
  auto z = rational_reconstruct(IntMod(0, 101), 7);
  REQUIRE(z);
  CHECK(*z == 0);

  auto b1 = brute_reconstruct(51, 101, 7);
  REQUIRE(b1.size() == 1);
  auto h = rational_reconstruct(IntMod(51, 101), 7);
  REQUIRE(h);
  CHECK(*h == b1[0]);
  CHECK(*h == Rat(1, 2));

  CHECK(brute_reconstruct(7, 101, 2).empty());
  CHECK_FALSE(rational_reconstruct(IntMod(7, 101), 2));

  CHECK_THROWS_AS(rational_reconstruct(IntMod(3, 101), 8), Error);
}

TEST_CASE("rational_reconstruct agrees with exhaustive search") {
  for (long m : {101L, 211L, 997L}) {
    long bound = 1;
    while (2 * (bound + 1) * (bound + 1) < m) ++bound;
    for (long r = 0; r < m; ++r) {
      auto brute = brute_reconstruct(r, m, bound);
      auto got = rational_reconstruct(IntMod(r, m), bound);
      CHECK(brute.size() <= 1);
      if (brute.empty()) {
        CHECK_FALSE(got);
      } else {
        REQUIRE(got);
        CHECK(*got == brute[0]);
      }
    }
  }
}

TEST_CASE("rational_reconstruct round trip on random fractions") {
  std::mt19937_64 rng(7);
  Int m("1000000000000000000000000000057");
  for (int i = 0; i < 300; ++i) {
    long a = static_cast<long>(rng() % 2000000) - 1000000;
    long b = static_cast<long>(rng() % 1000000) + 1;
    Rat q(a, b);
    q.canonicalize();
    Int r = mod_floor(Int(q.get_num()) * inv_mod(q.get_den(), m), m);
    Int bound = 1000000;
    auto got = rational_reconstruct(IntMod(r, m), bound);
    REQUIRE(got);
    CHECK(*got == q);
  }
}

TEST_CASE("crt_combine examples and exhaustive agreement") {
  CHECK(crt_combine({IntMod(1, 3), IntMod(1, 5)}) == IntMod(1, 15));
  CHECK(brute_crt({{2, 3}, {3, 5}}) == 8);
  CHECK(crt_combine({IntMod(2, 3), IntMod(3, 5)}) == IntMod(8, 15));
  CHECK(crt_combine({IntMod(0, 4), IntMod(0, 9)}) == IntMod(0, 36));
  CHECK_THROWS_AS(crt_combine({IntMod(1, 4), IntMod(1, 6)}), Error);

  std::mt19937 rng(11);
  const long moduli[] = {2, 3, 4, 5, 7, 9, 11, 13, 25, 27, 31};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::pair<long, long>> sys;
    std::vector<IntMod> in;
    long prod = 1;
    for (int j = 0; j < 3; ++j) {
      long m = moduli[rng() % 11];
      bool coprime = true;
      for (auto& [r, mm] : sys) coprime = coprime && gcd_u64(m, mm) == 1;
      if (!coprime || prod * m > 10000) continue;
      long r = rng() % m;
      sys.push_back({r, m});
      in.push_back(IntMod(r, m));
      prod *= m;
    }
    IntMod got = crt_combine(in);
    CHECK(got.modulus == prod);
    CHECK(got.value == brute_crt(sys));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("lll_reduce examples") {
  Lattice id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(lll_reduce(id).basis == id.basis);

  Lattice one{{{6}}};
  CHECK(lll_reduce(one).basis == one.basis);

  Lattice l{{{1, 0}, {10, 1}}};
  auto red = lll_reduce(l).basis;
  // Shortest vectors of Z^2 by enumeration are the four units.
  bool has = false;
  for (auto& v : red) has = has || (v[0] == 0 && abs(v[1]) == 1);
  CHECK(has);
  for (auto& v : red) CHECK(v[0] * v[0] + v[1] * v[1] == 1);

  CHECK_THROWS_AS(lll_reduce(Lattice{{{1, 2}, {2, 4}}}), Error);
}

TEST_CASE("lll_reduce preserves the lattice and reduces") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 2 + trial % 6;
    std::vector<IntVec> b(n, IntVec(n));
    for (auto& v : b)
      for (auto& c : v) c = static_cast<long>(rng() % 2001) - 1000;
    Int det = determinant(b);
    if (det == 0) continue;
    auto red = lll_reduce(Lattice{b}).basis;
    CHECK(abs(determinant(red)) == abs(det));
    // Every reduced vector is an integral combination of the input: solve via
    // Cramer and check integrality.
    for (auto& v : red) {
      for (size_t i = 0; i < n; ++i) {
        auto m = b;
        m[i] = v;
        Int num = determinant(m);
        CHECK(num % det == 0);
      }
    }
    // Lovasz condition and size reduction in exact rationals.
    std::vector<std::vector<Rat>> bs(n, std::vector<Rat>(n));
    std::vector<Rat> norms(n);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t c = 0; c < n; ++c) bs[i][c] = Rat(red[i][c]);
      for (size_t j = 0; j < i; ++j) {
        Rat d = 0;
        for (size_t c = 0; c < n; ++c) d += Rat(red[i][c]) * bs[j][c];
        mu[i][j] = d / norms[j];
        for (size_t c = 0; c < n; ++c) bs[i][c] -= mu[i][j] * bs[j][c];
      }
      norms[i] = 0;
      for (size_t c = 0; c < n; ++c) norms[i] += bs[i][c] * bs[i][c];
    }
    for (size_t i = 1; i < n; ++i) {
      for (size_t j = 0; j < i; ++j) CHECK(abs(mu[i][j]) <= Rat(1, 2));
      CHECK(norms[i] >= (Rat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]);
    }
  }
}

TEST_CASE("word helpers") {
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1000001));
  CHECK(euler_phi(27) == 18);
  CHECK(euler_phi(16) == 8);
  CHECK(mul_order(2, 5) == 4);
  CHECK(mul_order(17, 16) == 1);
  CHECK(mul_order(41, 16) == 2);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(root_ceil(Int(1000), 3) == 10);
  CHECK(root_ceil(Int(1001), 3) == 11);
}
