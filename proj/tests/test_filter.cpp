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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclotors/error.hpp"
#include "cyclotors/filter.hpp"
#include "cyclotors/torsion.hpp"

using namespace cyclotors;

namespace {

bool has(const std::vector<GroupShape>& v, const GroupShape& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

GroupShape S(const char* s) { return parse_shape(s); }

Int gl2_order(uint64_t p) {
  Int q(static_cast<unsigned long>(p));
  return (q * q - 1) * (q * q - q);
}

}  // namespace

TEST_CASE("shapes") {
  CHECK(S("C4+C8") == GroupShape(4, 8));
  CHECK(S("C2xC6") == GroupShape(2, 6));
  CHECK(S("C2⊕C10") == GroupShape(2, 10));
  CHECK(S("C13") == GroupShape::cyclic(13));
  CHECK(GroupShape(4, 8).pretty() == "C4⊕C8");
  CHECK_THROWS_AS(GroupShape(3, 8), Error);
  CHECK_THROWS_AS(S("D4"), Error);
  CHECK(is_subgroup(S("C2+C4"), S("C4+C8")));
  CHECK(!is_subgroup(S("C4+C4"), S("C2+C16")));
}

TEST_CASE("known sets") {
  const auto& m = known_set("PHI_Q_1");
  CHECK(m.shapes.size() == 15);
  for (const auto& s : m.shapes) CHECK(known_set("PHI_Q_2").contains(s));
  CHECK(known_set("PHI_Q_4").shapes.empty());
  CHECK(!known_set("PHI_Q_4").provenance.empty());
  CHECK(known_set("PHI_Q_3").contains(S("C21")));
  CHECK(known_set("Q_AB").contains(S("C8+C8")));
  CHECK(known_set("ISOGENY_DEGREES").values.size() == 26);
  CHECK_THROWS_AS(known_set("PHI_Q_9"), Error);
  // Every torsion group over Q lies in a group over Q^ab.
  for (const auto& s : m.shapes) {
    bool inside = false;
    for (const auto& g : known_set("Q_AB").shapes) inside = inside || is_subgroup(s, g);
    CHECK(inside);
  }
}

TEST_CASE("candidate universe") {
  auto u = candidate_universe(16);
  CHECK(has(u, S("C1")));
  CHECK(has(u, S("C2+C14")));
  CHECK(has(u, S("C14")));
  CHECK(!has(u, S("C5+C10")));
  CHECK(!has(u, S("C23")));
  std::set<GroupShape> uniq(u.begin(), u.end());
  CHECK(uniq.size() == u.size());
  // Closed under subgroups.
  for (const auto& g : u)
    for (uint64_t c = 1; c <= g.a; ++c)
      for (uint64_t d = c; d <= g.b; d += c)
        if (g.a % c == 0 && g.b % d == 0) CHECK(uniq.count(GroupShape(c, d)));
}

TEST_CASE("weil rule") {
  CHECK(rule_weil(S("C3+C3"), 16).kind == VerdictKind::Eliminated);
  CHECK(rule_weil(S("C4+C4"), 16).kind == VerdictKind::Pass);
  CHECK(rule_weil(S("C6+C6"), 27).kind == VerdictKind::Pass);
  CHECK(rule_weil(S("C5+C5"), 5).kind == VerdictKind::Pass);
  CHECK(rule_weil(S("C2+C2"), 1).kind == VerdictKind::Pass);
}

TEST_CASE("degree rule") {
  auto c11 = rule_degree(S("C11"), 16);
  CHECK(c11.bound == 2);
  CHECK(c11.verdict.kind == VerdictKind::Eliminated);
  CHECK(rule_degree(S("C25"), 16).bound == 4);
  CHECK(rule_degree(S("C25"), 16).verdict.kind == VerdictKind::Pass);
  CHECK(rule_degree(S("C13"), 27).bound == 6);
  CHECK(rule_degree(S("C13"), 27).degrees == std::vector<uint64_t>{1, 2, 3, 6});
  auto c17 = rule_degree(S("C17"), 16);
  CHECK(c17.bound == 4);
  CHECK(c17.cyclic_quotient_used);
  // C2+C14: [Q(2P) : Q] divides gcd(phi(7), 8, 4) = 2, and C7 occurs over quadratic fields.
  CHECK(rule_degree(S("C2+C14"), 16).bound == 2);
  CHECK(rule_degree(S("C2+C14"), 16).verdict.kind == VerdictKind::Pass);
  // With (Z/N)^x cyclic the bound is plain gcd(phi(n), phi(N)).
  for (uint64_t n : {5, 7, 11, 27})
    for (const auto& s : candidate_universe(n)) {
      auto dc = rule_degree(s, n);
      CHECK(dc.bound == std::gcd(euler_phi(s.b / s.a), euler_phi(n)));
      CHECK(!dc.cyclic_quotient_used);
    }
}

TEST_CASE("isogeny rule") {
  CHECK(rule_isogeny(S("C23"), 16).kind == VerdictKind::Eliminated);
  CHECK(rule_isogeny(S("C19"), 27).kind == VerdictKind::Pass);
  CHECK(rule_isogeny(S("C7"), 7).kind == VerdictKind::Pass);
  CHECK(rule_isogeny(S("C29"), 5).kind == VerdictKind::Eliminated);
  CHECK(rule_isogeny(S("C2+C10"), 5).kind == VerdictKind::Pass);
}

TEST_CASE("image tables") {
  auto r = image_lookup(5, "5B.1.1");
  CHECK(r.dv == std::vector<uint64_t>{1, 20});
  CHECK(r.d == 20);
  CHECK(image_lookup(7, "7Ns.2.1").dv == std::vector<uint64_t>{6, 9, 18});
  CHECK(image_lookup(13, "13B").d == 1872);
  CHECK(image_lookup(13, "13B").dv == std::vector<uint64_t>{12, 156});
  CHECK_THROWS_AS(image_lookup(5, "5X"), Error);
  CHECK(image_table().size() == 63);
  for (const auto& rec : image_table()) {
    INFO(rec.sutherland);
    for (uint64_t v : rec.dv) CHECK(rec.d % v == 0);
    CHECK(gl2_order(rec.p) % Int(static_cast<unsigned long>(rec.d)) == 0);
  }
}

TEST_CASE("classification over Q(zeta_16)") {
  FilterReport r = classify(16);
  CHECK(r.conflicts.empty());
  CHECK(r.entries.size() == candidate_universe(16).size());
  std::vector<GroupShape> expect = known_set("PHI_Q_1").shapes;
  expect.push_back(S("C4+C4"));
  expect.push_back(S("C2+C10"));
  std::sort(expect.begin(), expect.end());
  CHECK(r.with(VerdictKind::Survives) == expect);
  CHECK(r.verdict(S("C4+C4")).exemplar == "15a1");
  CHECK(r.verdict(S("C2+C10")).exemplar == "2112bd2");
  for (const char* s : {"C13", "C15", "C16", "C2+C12", "C4+C8", "C17", "C21", "C25", "C37", "C8+C8"})
    CHECK(r.verdict(S(s)).kind == VerdictKind::Undecided);
  for (const char* s : {"C11", "C14", "C18", "C19", "C27", "C43", "C67", "C163"})
    CHECK(r.verdict(S(s)).rule == "degree");
  for (const char* s : {"C3+C3", "C3+C9", "C5+C5", "C6+C6"}) CHECK(r.verdict(S(s)).rule == "weil");
  std::string c16 = r.verdict(S("C16")).citation;
  CHECK(c16.find("r(J_1(16)(Q(ζ_16))) = 0") != std::string::npos);
  CHECK(c16.find("|J_1(16)(F_17)| = 400") != std::string::npos);
  CHECK(c16.find("14 points on X₁(16)") != std::string::npos);
  CHECK_THROWS_AS(r.verdict(S("C23")), Error);
}

TEST_CASE("classification over Q(zeta_27) and Q(zeta_p)") {
  FilterReport r = classify(27);
  CHECK(r.conflicts.empty());
  auto sv = r.with(VerdictKind::Survives);
  for (const char* s : {"C3+C3", "C3+C6", "C3+C9", "C21", "C27"}) CHECK(has(sv, S(s)));
  for (const auto& s : known_set("PHI_Q_1").shapes) CHECK(has(sv, s));
  for (const char* s : {"C11", "C17", "C25"}) CHECK(r.verdict(S(s)).rule == "degree");
  CHECK(r.verdict(S("C6+C6")).kind == VerdictKind::Undecided);
  CHECK(r.verdict(S("C19")).kind == VerdictKind::Undecided);
  for (uint64_t n : {5, 7, 11, 16, 27}) {
    FilterReport rep = classify(n);
    CHECK(rep.conflicts.empty());
    for (const auto& s : recorded_survivors(n)) CHECK(rep.verdict(s).kind == VerdictKind::Survives);
    for (const auto& e : rep.entries)
      if (e.verdict.kind == VerdictKind::Undecided) CHECK(!e.verdict.citation.empty());
  }
  CHECK(recorded_survivors(7).size() == 5);
  CHECK(recorded_survivors(11).size() == 3);
}

TEST_CASE("rules never eliminate realized torsion") {
  struct Case {
    std::array<long, 5> a;
    uint64_t n;
  };
  std::vector<Case> cases{{{1, 1, 1, -10, -10}, 16}, {{0, 1, 0, 7359, -279873}, 16}, {{0, 0, 1, -30, 63}, 27},
                          {{1, -1, 1, -5, 5}, 27},   {{0, 0, 1, 0, -7}, 27},         {{1, 1, 1, 197, 681}, 5},
                          {{1, 0, 1, -76, 298}, 5},  {{0, 1, 1, -114, 473}, 7},      {{1, 0, 1, -1, 0}, 7},
                          {{0, -1, 1, 0, 0}, 11},    {{0, -1, 1, -10, -20}, 5}};
  for (const auto& c : cases) {
    auto e = EllipticCurve::from_ainvs({Rat(c.a[0]), Rat(c.a[1]), Rat(c.a[2]), Rat(c.a[3]), Rat(c.a[4])});
    TorsionGroup g = torsion_structure(e, c.n);
    GroupShape s(g.a, g.b);
    INFO(e.str(), " over N = ", c.n, ": ", s.str());
    CHECK(classify(c.n).verdict(s).kind != VerdictKind::Eliminated);
  }
}
