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

#include "cyclotors/report.hpp"

#include <regex>
#include <sstream>

#include "cyclotors/error.hpp"

namespace cyclotors {

namespace {

std::string field_name(uint64_t n) { return n <= 2 ? "Q" : "Q(zeta_" + std::to_string(n) + ")"; }

std::string join(const std::vector<uint64_t>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string pretty(const TorsionGroup& g) { return GroupShape(g.a, g.b).pretty(); }

std::vector<std::pair<uint64_t, const Point*>> generators(const TorsionGroup& g) {
  std::vector<std::pair<uint64_t, const Point*>> out;
  if (!g.gen_a.empty()) out.push_back({g.a, &g.gen_a.front()});
  if (!g.gen_b.empty()) out.push_back({g.b, &g.gen_b.front()});
  return out;
}

std::string invariants(const TorsionGroup& g) {
  std::vector<uint64_t> v;
  if (g.a > 1) v.push_back(g.a);
  if (g.b > 1) v.push_back(g.b);
  return v.empty() ? "trivial" : join(v, ",");
}

std::string strip_times(const std::string& s) {
  static const std::regex t("[0-9]+\\.[0-9]+ s");
  return std::regex_replace(s, t, "- s");
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "structured") return Format::Structured;
  fail(ErrorCode::Usage, "unknown format: " + s);
}

std::string render_torsion(const CurveInfo& c, const TorsionGroup& g, Format f) {
  std::ostringstream o;
  const char* status = g.complete ? "complete" : "incomplete";
  if (f == Format::Text) {
    o << "curve: " << (c.label.empty() ? c.ainvs : c.label + " " + c.ainvs) << '\n';
    o << "field: " << field_name(g.conductor) << '\n';
    o << "torsion: " << pretty(g) << " (order " << g.order() << ")\n";
    o << "invariant factors: " << invariants(g) << '\n';
    o << "generators:\n";
    for (const auto& [n, p] : generators(g)) o << "  order " << n << ": " << p->str() << '\n';
    o << "bound: " << to_string(g.bound.bound) << " (gcd of counts " << to_string(g.bound.raw) << ")\n";
    for (const auto& e : g.bound.evidence)
      o << "  #E(F_" << e.p << (e.f > 1 ? "^" + std::to_string(e.f) : "") << ") = " << to_string(e.count) << '\n';
    o << "status: " << status << '\n';
    for (const auto& n : g.notes) o << "note: " << n << '\n';
    return o.str();
  }
  o << "report: torsion\nversion: 1\n";
  o << "label: " << (c.label.empty() ? "-" : c.label) << '\n';
  o << "ainvs: " << c.ainvs << '\n';
  o << "conductor: " << g.conductor << '\n';
  o << "shape: " << GroupShape(g.a, g.b).str() << '\n';
  o << "invariants: " << invariants(g) << '\n';
  o << "order: " << g.order() << '\n';
  o << "bound: " << to_string(g.bound.bound) << '\n';
  o << "bound_raw: " << to_string(g.bound.raw) << '\n';
  o << "status: " << status << '\n';
  o << "#generators\torder\tx\ty\n";
  for (const auto& [n, p] : generators(g)) o << "gen\t" << n << '\t' << p->x().str() << '\t' << p->y().str() << '\n';
  o << "#evidence\tp\tf\tcount\n";
  for (const auto& e : g.bound.evidence) o << "ev\t" << e.p << '\t' << e.f << '\t' << to_string(e.count) << '\n';
  o << "#notes\ttext\n";
  for (const auto& n : g.notes) o << "note\t" << n << '\n';
  return o.str();
}

std::string render_filter(const FilterReport& r, Format f) {
  std::ostringstream o;
  size_t counts[4] = {0, 0, 0, 0};
  for (const auto& e : r.entries) ++counts[static_cast<int>(e.verdict.kind)];
  if (f == Format::Text) {
    o << "field: " << field_name(r.conductor) << '\n';
    o << "candidates: " << r.entries.size() << " (" << counts[2] << " SURVIVES, " << counts[1] << " ELIMINATED, "
      << counts[3] << " UNDECIDED)\n";
    for (const auto& e : r.entries) {
      o << "  " << e.shape.pretty() << ": " << verdict_name(e.verdict.kind);
      if (!e.verdict.rule.empty()) o << " by " << e.verdict.rule;
      if (!e.verdict.exemplar.empty()) o << " (" << e.verdict.exemplar << ")";
      o << '\n';
      if (!e.verdict.citation.empty()) o << "      " << e.verdict.citation << '\n';
    }
    for (const auto& c : r.conflicts) o << "conflict: " << c << '\n';
    return o.str();
  }
  o << "report: filter\nversion: 1\n";
  o << "conductor: " << r.conductor << '\n';
  o << "candidates: " << r.entries.size() << '\n';
  o << "survives: " << counts[2] << '\n';
  o << "eliminated: " << counts[1] << '\n';
  o << "undecided: " << counts[3] << '\n';
  o << "conflicts: " << r.conflicts.size() << '\n';
  o << "#verdicts\tshape\tverdict\trule\texemplar\tcitation\n";
  for (const auto& e : r.entries)
    o << "v\t" << e.shape.str() << '\t' << verdict_name(e.verdict.kind) << '\t'
      << (e.verdict.rule.empty() ? "-" : e.verdict.rule) << '\t'
      << (e.verdict.exemplar.empty() ? "-" : e.verdict.exemplar) << '\t'
      << (e.verdict.citation.empty() ? "-" : e.verdict.citation) << '\n';
  o << "#conflicts\ttext\n";
  for (const auto& c : r.conflicts) o << "c\t" << c << '\n';
  return o.str();
}

std::string render_images(const std::vector<ImageRecord>& rows, Format f) {
  std::ostringstream o;
  if (f == Format::Text) {
    o << "p   sutherland   zywina       d_v              d\n";
    for (const auto& r : rows) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-3llu %-12s %-12s %-16s %llu\n", static_cast<unsigned long long>(r.p),
                    r.sutherland.c_str(), r.zywina.c_str(), join(r.dv, ",").c_str(),
                    static_cast<unsigned long long>(r.d));
      o << buf;
    }
    return o.str();
  }
  o << "report: tables\nversion: 1\nrows: " << rows.size() << '\n';
  o << "#images\tp\tsutherland\tzywina\td_v\td\n";
  for (const auto& r : rows)
    o << "img\t" << r.p << '\t' << r.sutherland << '\t' << r.zywina << '\t' << join(r.dv, ",") << '\t' << r.d
      << '\n';
  return o.str();
}

std::string render_verification(const std::vector<CriterionResult>& rs, Format f) {
  std::ostringstream o;
  size_t passed = 0;
  for (const auto& r : rs) passed += r.pass;
  if (f == Format::Text) {
    for (const auto& r : rs) {
      for (const auto& d : r.details) o << "    " << d << '\n';
      o << criterion_line(r) << '\n';
    }
    o << passed << "/" << rs.size() << " criteria passed\n";
    return o.str();
  }
  o << "report: verify\nversion: 1\n";
  o << "criteria: " << rs.size() << '\n';
  o << "passed: " << passed << '\n';
  o << "#criteria\tid\tstatus\ttitle\n";
  for (const auto& r : rs) o << "crit\t" << r.id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << r.title << '\n';
  o << "#details\tid\ttext\n";
  for (const auto& r : rs)
    for (const auto& d : r.details) o << "d\t" << r.id << '\t' << strip_times(d) << '\n';
  return o.str();
}

}  // namespace cyclotors
