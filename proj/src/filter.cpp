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

#include "cyclotors/filter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "cyclotors/arith.hpp"
#include "cyclotors/cyclo.hpp"
#include "cyclotors/error.hpp"
#include "embedded.hpp"

namespace cyclotors {

GroupShape::GroupShape(uint64_t a_, uint64_t b_) : a(a_), b(b_) {
  if (a < 1 || b < 1 || b % a != 0) fail(ErrorCode::InvalidArgument, "group shape needs a | b");
}

std::string GroupShape::str() const {
  if (a == 1) return "C" + std::to_string(b);
  return "C" + std::to_string(a) + "+C" + std::to_string(b);
}

std::string GroupShape::pretty() const {
  if (a == 1) return "C" + std::to_string(b);
  return "C" + std::to_string(a) + "⊕C" + std::to_string(b);
}

GroupShape parse_shape(std::string_view s) {
  auto num = [&](std::string_view t) -> uint64_t {
    if (t.size() < 2 || (t[0] != 'C' && t[0] != 'c')) fail(ErrorCode::InvalidArgument, "bad group shape");
    uint64_t v = 0;
    for (char ch : t.substr(1)) {
      if (ch < '0' || ch > '9') fail(ErrorCode::InvalidArgument, "bad group shape");
      v = v * 10 + static_cast<uint64_t>(ch - '0');
    }
    return v;
  };
  for (std::string_view sep : {"+", "x", "⊕"}) {
    size_t k = s.find(sep);
    if (k != std::string_view::npos) return GroupShape(num(s.substr(0, k)), num(s.substr(k + sep.size())));
  }
  return GroupShape(1, num(s));
}

bool is_subgroup(const GroupShape& h, const GroupShape& g) { return g.a % h.a == 0 && g.b % h.b == 0; }

bool KnownSet::contains(const GroupShape& s) const {
  return std::find(shapes.begin(), shapes.end(), s) != shapes.end();
}

bool KnownSet::has_order(uint64_t n) const {
  for (const auto& s : shapes)
    if (s.b % n == 0) return true;
  return false;
}

namespace {

struct Tables {
  std::vector<KnownSet> sets;
  std::vector<ImageRecord> images;
  // conductor -> shape -> recorded verdict; shape "*" is the default.
  std::map<uint64_t, std::map<std::string, Verdict>> verdicts;
};

uint64_t to_u64(const std::string& s) { return std::stoull(s); }

Tables load() {
  Tables t;
  for (const char* name : {"PHI_Q_1", "PHI_Q_2", "PHI_Q_3", "PHI_Q_4", "Q_AB", "ISOGENY_DEGREES"})
    t.sets.push_back(KnownSet{name, {}, {}, ""});
  for (const auto& r : detail::tsv_rows(embedded::known_sets)) {
    if (r.size() < 3) throw std::logic_error("malformed known_sets row");
    auto it = std::find_if(t.sets.begin(), t.sets.end(), [&](const KnownSet& k) { return k.name == r[0]; });
    if (it == t.sets.end()) throw std::logic_error("unknown set " + r[0]);
    if (it->name == "ISOGENY_DEGREES")
      it->values.push_back(to_u64(r[1]));
    else
      it->shapes.push_back(parse_shape(r[1]));
    it->provenance = r[2];
  }
  t.sets[3].provenance = "not transcribed; dependent rule branches disabled";
  for (const auto& r : detail::tsv_rows(embedded::images)) {
    if (r.size() < 5) throw std::logic_error("malformed images row");
    ImageRecord rec{to_u64(r[0]), r[1], r[2], {}, to_u64(r[4])};
    size_t pos = 0;
    while (pos <= r[3].size()) {
      size_t c = r[3].find(',', pos);
      if (c == std::string::npos) c = r[3].size();
      rec.dv.push_back(to_u64(r[3].substr(pos, c - pos)));
      pos = c + 1;
    }
    t.images.push_back(std::move(rec));
  }
  for (const auto& r : detail::tsv_rows(embedded::verdicts)) {
    if (r.size() < 4) throw std::logic_error("malformed verdicts row");
    Verdict v;
    if (r[2] == "SURVIVES") {
      v.kind = VerdictKind::Survives;
      v.rule = "exemplar";
      if (r[3] != "-") v.exemplar = r[3];
      v.citation = r.size() > 4 ? r[4] : "";
    } else if (r[2] == "UNDECIDED") {
      v.kind = VerdictKind::Undecided;
      v.rule = "out-of-scope";
      v.citation = r[3];
    } else {
      throw std::logic_error("bad verdict " + r[2]);
    }
    std::string key = r[1] == "*" ? "*" : parse_shape(r[1]).str();
    t.verdicts[to_u64(r[0])][key] = v;
  }
  return t;
}

const Tables& tables() {
  static const Tables t = load();
  return t;
}

std::string field_name(uint64_t n) { return "Q(ζ_" + std::to_string(n) + ")"; }

bool units_cyclic(uint64_t n) { return largest_cyclic_quotient(n) == euler_phi(n); }

}  // namespace

const std::vector<KnownSet>& known_sets() { return tables().sets; }

const KnownSet& known_set(std::string_view name) {
  for (const auto& k : tables().sets)
    if (k.name == name) return k;
  fail(ErrorCode::NotFound, "unknown known set " + std::string(name));
}

const std::vector<ImageRecord>& image_table() { return tables().images; }

ImageRecord image_lookup(uint64_t p, std::string_view label) {
  for (const auto& r : tables().images)
    if (r.p == p && r.sutherland == label) return r;
  fail(ErrorCode::NotFound, "no image record " + std::string(label) + " for p = " + std::to_string(p));
}

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Pass: return "PASS";
    case VerdictKind::Eliminated: return "ELIMINATED";
    case VerdictKind::Survives: return "SURVIVES";
    case VerdictKind::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::vector<GroupShape> candidate_universe(uint64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  std::set<GroupShape> out;
  for (const auto& g : known_set("Q_AB").shapes)
    for (uint64_t c = 1; c <= g.a; ++c) {
      if (g.a % c) continue;
      for (uint64_t d = c; d <= g.b; d += c)
        if (g.b % d == 0) out.insert(GroupShape(c, d));
    }
  return {out.begin(), out.end()};
}

Verdict rule_weil(const GroupShape& s, uint64_t n) {
  Verdict v;
  v.rule = "weil";
  if (!contains_cyclotomic(s.a, n)) {
    v.kind = VerdictKind::Eliminated;
    v.citation = "Weil pairing: full " + std::to_string(s.a) + "-torsion needs " + field_name(s.a) + " inside " +
                 field_name(n);
  }
  return v;
}

DegreeConstraint rule_degree(const GroupShape& s, uint64_t n) {
  DegreeConstraint dc;
  dc.m = s.a;
  dc.n = s.b / s.a;
  dc.verdict.rule = "degree";
  dc.bound = std::gcd(euler_phi(dc.n), euler_phi(n));
  // The orbit character of mP takes values in (Z/n)^x; when that group is
  // cyclic its image is a cyclic quotient of Gal(Q(zeta_N)/Q).
  if (units_cyclic(dc.n)) {
    uint64_t g = std::gcd(dc.bound, largest_cyclic_quotient(n));
    dc.cyclic_quotient_used = g != dc.bound;
    dc.bound = g;
  }
  for (uint64_t d = 1; d <= dc.bound; ++d)
    if (dc.bound % d == 0) dc.degrees.push_back(d);
  if (dc.n == 1) return dc;
  const char* set = nullptr;
  if (dc.bound == 1) set = "PHI_Q_1";
  else if (dc.bound == 2) set = "PHI_Q_2";
  else if (dc.bound == 3) set = "PHI_Q_3";
  else if (dc.bound == 4) set = "PHI_Q_4";
  if (!set) return dc;
  const KnownSet& ks = known_set(set);
  if (ks.shapes.empty()) {
    dc.verdict.citation = std::string(set) + " not available; degree constraint unused";
    return dc;
  }
  if (!ks.has_order(dc.n)) {
    dc.verdict.kind = VerdictKind::Eliminated;
    std::string pt = dc.m == 1 ? "P" : std::to_string(dc.m) + "P";
    dc.verdict.citation = "[Q(" + pt + ") : Q] divides " + std::to_string(dc.bound) +
                          ", but no group in " + set + " has a point of order " + std::to_string(dc.n);
  }
  return dc;
}

Verdict rule_isogeny(const GroupShape& s, uint64_t) {
  Verdict v;
  v.rule = "isogeny";
  if (!s.is_cyclic() || s.b % 2 == 0 || s.b == 1) return v;
  auto f = factor_u64(s.b);
  if (f.size() != 1) return v;
  const auto& deg = known_set("ISOGENY_DEGREES").values;
  if (std::find(deg.begin(), deg.end(), s.b) == deg.end()) {
    v.kind = VerdictKind::Eliminated;
    v.citation = "a Galois-stable cyclic subgroup of order " + std::to_string(s.b) +
                 " gives a rational isogeny of a degree that does not occur over Q";
  }
  return v;
}

const Verdict& FilterReport::verdict(const GroupShape& s) const {
  for (const auto& e : entries)
    if (e.shape == s) return e.verdict;
  fail(ErrorCode::NotFound, s.str() + " is not a candidate");
}

std::vector<GroupShape> FilterReport::with(VerdictKind k) const {
  std::vector<GroupShape> r;
  for (const auto& e : entries)
    if (e.verdict.kind == k) r.push_back(e.shape);
  return r;
}

std::vector<GroupShape> recorded_survivors(uint64_t n) {
  std::vector<GroupShape> r;
  auto it = tables().verdicts.find(n);
  if (it == tables().verdicts.end()) return r;
  for (const auto& [key, v] : it->second)
    if (key != "*" && v.kind == VerdictKind::Survives) r.push_back(parse_shape(key));
  std::sort(r.begin(), r.end());
  return r;
}

FilterReport classify(uint64_t n) {
  FilterReport rep;
  rep.conductor = n;
  const auto& mazur = known_set("PHI_Q_1");
  static const std::map<std::string, Verdict> none;
  auto vt = tables().verdicts.find(n);
  const auto& recorded = vt == tables().verdicts.end() ? none : vt->second;
  for (const auto& s : candidate_universe(n)) {
    Verdict v = rule_weil(s, n);
    if (v.kind == VerdictKind::Pass) v = rule_degree(s, n).verdict;
    if (v.kind == VerdictKind::Pass) v = rule_isogeny(s, n);
    auto rec = recorded.find(s.str());
    if (v.kind == VerdictKind::Eliminated) {
      if (mazur.contains(s) || (rec != recorded.end() && rec->second.kind == VerdictKind::Survives))
        rep.conflicts.push_back(s.str() + " eliminated by " + v.rule + " but recorded as occurring");
    } else if (mazur.contains(s)) {
      v = Verdict{VerdictKind::Survives, "mazur", "occurs over Q", ""};
      if (rec != recorded.end() && rec->second.kind == VerdictKind::Survives) v.exemplar = rec->second.exemplar;
    } else if (rec != recorded.end()) {
      v = rec->second;
    } else if (auto d = recorded.find("*"); d != recorded.end()) {
      v = d->second;
    } else {
      v = Verdict{VerdictKind::Undecided, "out-of-scope", "no recorded argument for " + field_name(n), ""};
    }
    rep.entries.push_back({s, v});
  }
  return rep;
}

}  // namespace cyclotors
