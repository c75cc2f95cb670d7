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

#include "cyclotors/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cyclotors/error.hpp"

namespace cyclotors {

namespace {

// Exact division of integer polynomials, divisor monic.
IntVec div_monic(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  size_t db = b.size() - 1;
  if (r.size() < b.size()) return {0};
  IntVec q(r.size() - db, 0);
  for (size_t i = r.size(); i-- > db;) {
    Int c = r[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

IntVec cyclotomic_poly(uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic_poly needs n >= 1");
  IntVec p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (uint64_t d = 1; d < n; ++d)
    if (n % d == 0) p = div_monic(p, cyclotomic_poly(d));
  return p;
}

CycField::CycField(uint64_t n) : n_(n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  phi_ = cyclotomic_poly(n);
  d_ = phi_.size() - 1;
  powers_.assign(n, IntVec(d_, 0));
  IntVec cur(d_, 0);
  cur[0] = 1;
  for (uint64_t e = 0; e < n; ++e) {
    powers_[e] = cur;
    // cur <- cur * z mod Phi
    Int top = cur[d_ - 1];
    for (size_t i = d_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (size_t i = 0; i < d_; ++i) cur[i] -= top * phi_[i];
  }
  for (uint64_t a = 1; a <= n; ++a)
    if (gcd_u64(a % n, n) == 1) units_.push_back(a % n);
  if (n == 1) units_ = {0};
  std::sort(units_.begin(), units_.end());
}

CycFieldPtr CycField::get(uint64_t n) {
  static std::mutex mu;
  static std::map<uint64_t, CycFieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto k = std::make_shared<const CycField>(n);
  cache[n] = k;
  return k;
}

CycElem::CycElem(CycFieldPtr k) : k_(std::move(k)), num_(k_->degree(), 0), den_(1) {}

CycElem::CycElem(CycFieldPtr k, const Rat& q) : CycElem(std::move(k)) {
  num_[0] = q.get_num();
  den_ = q.get_den();
}

CycElem CycElem::from_coords(CycFieldPtr k, const std::vector<Rat>& coords) {
  if (coords.size() != k->degree())
    fail(ErrorCode::InvalidArgument, "coordinate count differs from field degree");
  CycElem x(std::move(k));
  Int l = 1;
  for (const auto& c : coords) l = lcm(l, Int(c.get_den()));
  for (size_t i = 0; i < coords.size(); ++i)
    x.num_[i] = coords[i].get_num() * (l / coords[i].get_den());
  x.den_ = l;
  x.normalize();
  return x;
}

CycElem CycElem::from_ints(CycFieldPtr k, IntVec num, Int den) {
  if (num.size() != k->degree())
    fail(ErrorCode::InvalidArgument, "coordinate count differs from field degree");
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  CycElem x(std::move(k));
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

CycElem CycElem::zeta(CycFieldPtr k, int64_t e) {
  CycElem x(k);
  int64_t n = static_cast<int64_t>(k->conductor());
  uint64_t r = static_cast<uint64_t>(((e % n) + n) % n);
  x.num_ = k->power(r);
  return x;
}

void CycElem::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Int g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycElem::same_field(const CycElem& o) const {
  if (k_ != o.k_ && k_->conductor() != o.k_->conductor())
    fail(ErrorCode::InvalidArgument, "elements of different fields");
}

std::vector<Rat> CycElem::coords() const {
  std::vector<Rat> out(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) out[i] = make_rat(num_[i], den_);
  return out;
}

bool CycElem::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycElem::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycElem::is_one() const { return is_rational() && num_[0] == den_; }

Rat CycElem::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "element is not rational");
  return make_rat(num_[0], den_);
}

CycElem CycElem::operator+(const CycElem& o) const {
  same_field(o);
  CycElem r(k_);
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] + o.num_[i];
    r.den_ = den_;
  } else {
    for (size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycElem CycElem::operator-(const CycElem& o) const { return *this + (-o); }

CycElem CycElem::operator*(const CycElem& o) const {
  same_field(o);
  const size_t d = num_.size();
  CycElem r(k_);
  if (d == 1) {
    r.num_[0] = num_[0] * o.num_[0];
  } else {
    IntVec prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
      if (num_[i] == 0) continue;
      for (size_t j = 0; j < d; ++j)
        if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    const IntVec& phi = k_->minpoly();
    for (size_t i = 2 * d - 1; i-- > d;) {
      if (prod[i] == 0) continue;
      for (size_t j = 0; j < d; ++j)
        if (phi[j] != 0) mpz_submul(prod[i - d + j].get_mpz_t(), prod[i].get_mpz_t(), phi[j].get_mpz_t());
      prod[i] = 0;
    }
    for (size_t i = 0; i < d; ++i) r.num_[i] = std::move(prod[i]);
  }
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

CycElem CycElem::operator*(const Rat& q) const {
  CycElem r = *this;
  for (auto& c : r.num_) c *= q.get_num();
  r.den_ *= q.get_den();
  r.normalize();
  return r;
}

bool CycElem::operator<(const CycElem& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != o.num_[i]) return num_[i] < o.num_[i];
  return false;
}

CycElem CycElem::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycElem(k_, make_rat(den_, num_[0]));
  // x^{-1} = prod_{s != 1} s(x) / N(x)
  CycElem conj(k_, Rat(1));
  for (uint64_t a : k_->units()) {
    if (a == 1) continue;
    conj = conj * galois_apply(GaloisElement{k_, a}, *this);
  }
  CycElem nx = conj * *this;
  return conj * make_rat(nx.den_, nx.num_[0]);
}

CycElem CycElem::pow(uint64_t e) const {
  CycElem r(k_, Rat(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rat CycElem::norm() const {
  CycElem acc(k_, Rat(1));
  for (uint64_t a : k_->units()) acc = acc * galois_apply(GaloisElement{k_, a}, *this);
  return acc.rational_value();
}

std::string CycElem::str(const char* var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = num_.size(); i-- > 0;) {
    if (num_[i] == 0) continue;
    Rat c = make_rat(num_[i], den_);
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycElem elem_mul(const CycElem& x, const CycElem& y) { return x * y; }
CycElem elem_inv(const CycElem& x) { return x.inv(); }

CycElem embed(const CycElem& x, const CycFieldPtr& target) {
  uint64_t m = x.field()->conductor(), n = target->conductor();
  if (n % m != 0) fail(ErrorCode::InvalidArgument, "field does not embed");
  if (m == n) return x;
  IntVec num(target->degree(), 0);
  uint64_t step = n / m;
  for (size_t i = 0; i < x.num().size(); ++i) {
    if (x.num()[i] == 0) continue;
    const IntVec& p = target->power(step * i);
    for (size_t j = 0; j < num.size(); ++j) num[j] += x.num()[i] * p[j];
  }
  return CycElem::from_ints(target, std::move(num), x.den());
}

GaloisElement galois_element(const CycFieldPtr& k, int64_t a) {
  int64_t n = static_cast<int64_t>(k->conductor());
  uint64_t r = static_cast<uint64_t>(((a % n) + n) % n);
  if (gcd_u64(r, k->conductor()) != 1 && k->conductor() != 1)
    fail(ErrorCode::InvalidArgument, "Galois exponent not a unit");
  return GaloisElement{k, r};
}

CycElem galois_apply(const GaloisElement& s, const CycElem& x) {
  const auto& k = x.field();
  if (s.field->conductor() != k->conductor())
    fail(ErrorCode::InvalidArgument, "Galois element of a different field");
  if (s.a == 1 % k->conductor() || k->is_rational()) return x;
  IntVec num(k->degree(), 0);
  uint64_t n = k->conductor();
  for (size_t i = 0; i < x.num().size(); ++i) {
    if (x.num()[i] == 0) continue;
    const IntVec& p = k->power((s.a * i) % n);
    for (size_t j = 0; j < num.size(); ++j)
      if (p[j] != 0) num[j] += x.num()[i] * p[j];
  }
  return CycElem::from_ints(k, std::move(num), x.den());
}

std::vector<GaloisElement> galois_group(const CycFieldPtr& k) {
  std::vector<GaloisElement> g;
  for (uint64_t a : k->units()) g.push_back(GaloisElement{k, a});
  return g;
}

std::vector<GaloisElement> fixing_subgroup(const CycFieldPtr& k, uint64_t m) {
  uint64_t n = k->conductor();
  if (n % m != 0) fail(ErrorCode::InvalidArgument, "subfield conductor must divide N");
  std::vector<GaloisElement> h;
  for (uint64_t a : k->units())
    if (m == 1 || a % m == 1 % m) h.push_back(GaloisElement{k, a});
  return h;
}

bool fixed_by(const CycElem& x, const std::vector<GaloisElement>& h) {
  if (h.empty()) fail(ErrorCode::InvalidArgument, "empty Galois subset");
  uint64_t n = x.field()->conductor();
  auto member = [&](uint64_t a) {
    for (const auto& s : h)
      if (s.a % n == a % n) return true;
    return false;
  };
  for (const auto& s : h)
    for (const auto& t : h)
      if (!member((s.a * t.a) % n))
        fail(ErrorCode::InvalidArgument, "Galois subset not closed under composition");
  for (const auto& s : h)
    if (galois_apply(s, x) != x) return false;
  return true;
}

uint64_t field_conductor(uint64_t k) { return k % 4 == 2 ? k / 2 : k; }

bool contains_cyclotomic(uint64_t m, uint64_t n) {
  if (m == 0 || n == 0) fail(ErrorCode::InvalidArgument, "conductors must be positive");
  return field_conductor(n) % field_conductor(m) == 0;
}

SplittingData splitting_data(uint64_t p, uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "splitting_data needs a prime");
  if (n % p == 0) fail(ErrorCode::RamifiedPrime, std::to_string(p) + " ramifies in Q(zeta_" + std::to_string(n) + ")");
  SplittingData s;
  s.p = p;
  s.conductor = n;
  s.inertia_degree = mul_order(p % n, n);
  s.num_primes = euler_phi(n) / s.inertia_degree;
  return s;
}

uint64_t largest_cyclic_quotient(uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  uint64_t lam = 1;
  for (auto [p, e] : factor_u64(n)) {
    uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    uint64_t l = pe / p * (p - 1);
    if (p == 2 && e >= 3) l /= 2;
    lam = lam / gcd_u64(lam, l) * l;
  }
  return lam;
}

}  // namespace cyclotors
