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

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotors/elliptic.hpp"
#include "cyclotors/roots.hpp"

namespace cyclotors {

struct BoundEvidence {
  uint64_t p = 0;
  uint64_t f = 1;
  Int count;
};

struct TorsionBound {
  Int bound;  // raw gcd capped by the maximal orders over Q^ab
  Int raw;    // gcd of the counts
  std::vector<BoundEvidence> evidence;
};

struct TorsionOptions {
  int prime_budget = 8;
  RootOptions roots;
};

struct TorsionGroup {
  uint64_t conductor = 1;
  uint64_t a = 1;
  uint64_t b = 1;
  std::vector<Point> gen_a;  // empty or one generator of order a
  std::vector<Point> gen_b;  // empty or one generator of order b
  std::vector<Point> points; // all points when a*b <= 10^4
  bool complete = true;
  TorsionBound bound;
  std::vector<std::string> notes;

  uint64_t order() const { return a * b; }
  std::string shape() const;
};

struct PointsResult {
  std::vector<Point> points;
  bool complete = true;
};

// Largest power of l dividing an element order of E(Q^ab)_tors.
uint64_t qab_cap(uint64_t l);

TorsionBound torsion_bound(const EllipticCurve& e, uint64_t n, int prime_budget = 8);
PointsResult torsion_points_of_order(const EllipticCurve& e, uint64_t m, const CycFieldPtr& k,
                                     const RootOptions& opt = {});
TorsionGroup torsion_structure(const EllipticCurve& e, uint64_t n, const TorsionOptions& opt = {});
TorsionGroup torsion_over_subfield(const EllipticCurve& e, uint64_t n, const std::vector<GaloisElement>& h,
                                   const TorsionOptions& opt = {});
TorsionGroup torsion_over_subfield(const TorsionGroup& full, const std::vector<GaloisElement>& h);
uint64_t point_field_degree(const Point& p);
TorsionGroup torsion_mu_infinity(const EllipticCurve& e, uint64_t p, const TorsionOptions& opt = {});
// Structure of a finite group given by all of its points.
TorsionGroup group_from_points(const std::vector<Point>& pts, uint64_t conductor);

}  // namespace cyclotors
