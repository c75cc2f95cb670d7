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

#include "cyclotors/poly.hpp"

#include <sstream>

namespace cyclotors {

PolyQ polyq_from_ints(const IntVec& c) {
  std::vector<Rat> r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(x);
  return PolyQ(Rat(0), std::move(r));
}

CycElem eval_at(const PolyQ& f, const CycElem& x) {
  const auto& k = x.field();
  if (f.is_zero()) return CycElem(k);
  IntVec z = primitive_part(f);
  Rat scale = f.lead() / Rat(z.back());
  CycElem acc(k);
  for (size_t i = z.size(); i-- > 0;) acc = acc * x + CycElem(k, Rat(z[i]));
  return acc * scale;
}

IntVec primitive_part(const PolyQ& f) {
  if (f.is_zero()) return {};
  Int l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, Int(c.get_den()));
  IntVec z;
  z.reserve(f.coeffs().size());
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    z.push_back(c.get_num() * (l / c.get_den()));
    g = gcd(g, z.back());
  }
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

PolyK to_polyk(const PolyQ& f, const CycFieldPtr& k) {
  std::vector<CycElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.emplace_back(k, x);
  return PolyK(CycElem(k), std::move(c));
}

namespace {

template <class T, class F>
std::string render(const Poly<T>& f, const char* var, F coef_str) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    if (coef_is_zero(f.coeffs()[i])) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coef_str(f.coeffs()[i]);
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string poly_str(const PolyQ& f, const char* var) {
  return render(f, var, [](const Rat& c) { return c.get_str(); });
}

std::string poly_str(const PolyK& f, const char* var) {
  return render(f, var, [](const CycElem& c) {
    std::string s = c.str();
    return c.is_rational() ? s : "(" + s + ")";
  });
}

void zpoly_trim(IntVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntVec zpoly_add(const IntVec& a, const IntVec& b) {
  IntVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zpoly_trim(r);
  return r;
}

IntVec zpoly_sub(const IntVec& a, const IntVec& b) {
  IntVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zpoly_trim(r);
  return r;
}

IntVec zpoly_mul(const IntVec& a, const IntVec& b) {
  if (a.empty() || b.empty()) return {};
  IntVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  zpoly_trim(r);
  return r;
}

IntVec zpoly_scale(const IntVec& a, const Int& s) {
  IntVec r = a;
  for (auto& c : r) c *= s;
  zpoly_trim(r);
  return r;
}

}  // namespace cyclotors
