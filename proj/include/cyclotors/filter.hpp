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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclotors {

// C_a + C_b with a | b.
struct GroupShape {
  uint64_t a = 1;
  uint64_t b = 1;

  GroupShape() = default;
  GroupShape(uint64_t a_, uint64_t b_);
  static GroupShape cyclic(uint64_t n) { return GroupShape(1, n); }

  uint64_t order() const { return a * b; }
  bool is_cyclic() const { return a == 1; }
  // "C4+C8"; pretty() gives "C4⊕C8".
  std::string str() const;
  std::string pretty() const;
  auto operator<=>(const GroupShape& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    return a <=> o.a;
  }
  bool operator==(const GroupShape& o) const = default;
};

GroupShape parse_shape(std::string_view s);
bool is_subgroup(const GroupShape& h, const GroupShape& g);

struct KnownSet {
  std::string name;
  std::vector<GroupShape> shapes;
  std::vector<uint64_t> values;  // ISOGENY_DEGREES only
  std::string provenance;

  bool contains(const GroupShape& s) const;
  // Some member has a point of order n.
  bool has_order(uint64_t n) const;
};

const KnownSet& known_set(std::string_view name);
const std::vector<KnownSet>& known_sets();

struct ImageRecord {
  uint64_t p = 0;
  std::string sutherland;
  std::string zywina;
  std::vector<uint64_t> dv;
  uint64_t d = 0;
};

const std::vector<ImageRecord>& image_table();
ImageRecord image_lookup(uint64_t p, std::string_view sutherland_label);

enum class VerdictKind { Pass, Eliminated, Survives, Undecided };
std::string_view verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Pass;
  std::string rule;
  std::string citation;
  std::string exemplar;  // SURVIVES only; empty when none
};

struct DegreeConstraint {
  uint64_t m = 1;
  uint64_t n = 1;
  uint64_t bound = 1;  // every degree [Q(mP) : Q] divides this
  bool cyclic_quotient_used = false;
  std::vector<uint64_t> degrees;
  Verdict verdict;
};

std::vector<GroupShape> candidate_universe(uint64_t n);
Verdict rule_weil(const GroupShape& s, uint64_t n);
DegreeConstraint rule_degree(const GroupShape& s, uint64_t n);
Verdict rule_isogeny(const GroupShape& s, uint64_t n);

struct FilterEntry {
  GroupShape shape;
  Verdict verdict;
};

struct FilterReport {
  uint64_t conductor = 1;
  std::vector<FilterEntry> entries;
  // Recorded survivors that a rule eliminated. Empty unless a rule is unsound.
  std::vector<std::string> conflicts;

  const Verdict& verdict(const GroupShape& s) const;
  std::vector<GroupShape> with(VerdictKind k) const;
};

FilterReport classify(uint64_t n);
// Groups recorded as occurring over Q(zeta_N) beyond Mazur's list.
std::vector<GroupShape> recorded_survivors(uint64_t n);

}  // namespace cyclotors
