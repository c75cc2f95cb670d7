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

#include "cyclotors/cyclo.hpp"
#include "cyclotors/error.hpp"
#include "doctest.h"

using namespace cyclotors;

namespace {

CycElem random_elem(const CycFieldPtr& k, std::mt19937_64& rng, int range = 20) {
  std::vector<Rat> c(k->degree());
  for (auto& x : c) {
    long n = static_cast<long>(rng() % (2 * range + 1)) - range;
    long d = static_cast<long>(rng() % 5) + 1;
    x = Rat(n, d);
    x.canonicalize();
  }
  return CycElem::from_coords(k, c);
}

// Order of the largest cyclic quotient by brute force: the maximal element
// order of the finite abelian group (Z/N)^x.
uint64_t brute_max_order(uint64_t n) {
  uint64_t best = 1;
  for (uint64_t a = 1; a < n; ++a) {
    if (gcd_u64(a, n) != 1) continue;
    uint64_t x = a, k = 1;
    while (x != 1) { x = x * a % n; ++k; }
    best = std::max(best, k);
  }
  return best;
}

}  // namespace

TEST_CASE("cyclotomic_poly") {
  CHECK(cyclotomic_poly(1) == IntVec{-1, 1});
  IntVec p16(9, 0);
  p16[0] = 1;
  p16[8] = 1;
  CHECK(cyclotomic_poly(16) == p16);
  IntVec p27(19, 0);
  p27[0] = 1;
  p27[9] = 1;
  p27[18] = 1;
  CHECK(cyclotomic_poly(27) == p27);
  for (uint64_t n = 1; n <= 60; ++n) {
    IntVec p = cyclotomic_poly(n);
    CHECK(p.size() - 1 == euler_phi(n));
    CHECK(p.back() == 1);
    // Phi_n divides z^n - 1 exactly: z^n reduces to 1 in the quotient ring.
    auto k = CycField::get(n);
    CycElem z = CycElem::zeta(k);
    CHECK(z.pow(n).is_one());
  }
}

TEST_CASE("field arithmetic examples") {
  auto k16 = CycField::get(16);
  CycElem one(k16, 1);
  CHECK(elem_inv(one) == one);
  CycElem z8 = CycElem::zeta(k16).pow(8);
  CHECK(z8 == CycElem(k16, -1));
  CHECK(elem_mul(z8, z8) == one);

  std::mt19937_64 rng(5);
  auto k5 = CycField::get(5);
  for (int i = 0; i < 50; ++i) {
    CycElem x = random_elem(k5, rng);
    if (x.is_zero()) continue;
    CHECK(elem_mul(x, elem_inv(x)).is_one());
  }
  CHECK_THROWS_AS(elem_inv(CycElem(k5)), Error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(9);
  for (uint64_t n : {5u, 7u, 11u, 16u, 27u}) {
    auto k = CycField::get(n);
    for (int i = 0; i < 20; ++i) {
      CycElem a = random_elem(k, rng), b = random_elem(k, rng), c = random_elem(k, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("galois action") {
  std::mt19937_64 rng(13);
  for (uint64_t n : {5u, 7u, 9u, 16u, 27u}) {
    auto k = CycField::get(n);
    CycElem z = CycElem::zeta(k);
    CycElem real = z + CycElem::zeta(k, static_cast<int64_t>(n) - 1);
    CHECK(galois_apply(galois_element(k, n - 1), real) == real);
    for (int i = 0; i < 10; ++i) {
      CycElem x = random_elem(k, rng), y = random_elem(k, rng);
      CHECK(galois_apply(galois_element(k, 1), x) == x);
      for (uint64_t a : k->units()) {
        auto s = galois_element(k, a);
        CHECK(galois_apply(s, x + y) == galois_apply(s, x) + galois_apply(s, y));
        CHECK(galois_apply(s, x * y) == galois_apply(s, x) * galois_apply(s, y));
        uint64_t b = k->units()[rng() % k->units().size()];
        CHECK(galois_apply(s, galois_apply(galois_element(k, b), x)) ==
              galois_apply(galois_element(k, (a * b) % n), x));
      }
    }
    uint64_t u = k->units()[1];
    CHECK(galois_apply(galois_element(k, u), z) == CycElem::zeta(k, u));
  }
  CHECK_THROWS_AS(galois_element(CycField::get(16), 2), Error);
}

TEST_CASE("norm and embedding") {
  auto k7 = CycField::get(7);
  CycElem z = CycElem::zeta(k7);
  CHECK(z.norm() == 1);
  CHECK((CycElem(k7, 1) - z).norm() == 7);
  auto k9 = CycField::get(9), k27 = CycField::get(27);
  CycElem w = CycElem::zeta(k9);
  CHECK(embed(w, k27) == CycElem::zeta(k27, 3));
  CycElem q(k9, Rat(3, 4));
  CHECK(embed(q, k27) == CycElem(k27, Rat(3, 4)));
}

TEST_CASE("fixed_by") {
  auto k9 = CycField::get(9);
  CycElem z = CycElem::zeta(k9);
  std::vector<GaloisElement> id{galois_element(k9, 1)};
  CHECK(fixed_by(z, id));
  std::vector<GaloisElement> conj{galois_element(k9, 1), galois_element(k9, 8)};
  CHECK(fixed_by(z + CycElem::zeta(k9, 8), conj));
  CHECK_FALSE(fixed_by(z, conj));
  std::vector<GaloisElement> bad{galois_element(k9, 1), galois_element(k9, 2)};
  CHECK_THROWS_AS(fixed_by(z, bad), Error);

  auto k27 = CycField::get(27);
  auto h = fixing_subgroup(k27, 9);
  CHECK(h.size() == 3);
  CHECK(fixed_by(CycElem::zeta(k27, 3), h));
  CHECK_FALSE(fixed_by(CycElem::zeta(k27), h));
}

TEST_CASE("contains_cyclotomic") {
  CHECK(contains_cyclotomic(8, 16));
  CHECK_FALSE(contains_cyclotomic(4, 27));
  CHECK(contains_cyclotomic(2, 5));
  CHECK(contains_cyclotomic(6, 27));
  CHECK_FALSE(contains_cyclotomic(3, 16));
  CHECK(contains_cyclotomic(22, 11));
}

TEST_CASE("splitting_data") {
  auto s = splitting_data(17, 16);
  CHECK(s.inertia_degree == 1);
  CHECK(s.num_primes == 8);
  s = splitting_data(41, 16);
  CHECK(s.inertia_degree == 2);
  CHECK(s.num_primes == 4);
  s = splitting_data(2, 5);
  CHECK(s.inertia_degree == 4);
  CHECK(s.num_primes == 1);
  CHECK_THROWS_AS(splitting_data(2, 16), Error);
  try {
    splitting_data(3, 27);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RamifiedPrime);
  }
  for (uint64_t n = 1; n <= 60; ++n)
    for (uint64_t p = 2; p < 200; ++p) {
      if (!is_prime_u64(p) || n % p == 0) continue;
      auto d = splitting_data(p, n);
      CHECK(d.inertia_degree * d.num_primes == euler_phi(n));
      CHECK(powmod_u64(p, d.inertia_degree, n) == 1 % n);
    }
}

TEST_CASE("largest_cyclic_quotient") {
  CHECK(largest_cyclic_quotient(27) == 18);
  CHECK(largest_cyclic_quotient(16) == 4);
  CHECK(largest_cyclic_quotient(5) == 4);
  for (uint64_t n = 2; n <= 200; ++n) CHECK(largest_cyclic_quotient(n) == brute_max_order(n));
}
