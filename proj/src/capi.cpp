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

#include "cyclotors.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "cyclotors/error.hpp"
#include "cyclotors/filter.hpp"
#include "cyclotors/lmfdb.hpp"
#include "cyclotors/report.hpp"
#include "cyclotors/torsion.hpp"
#include "cyclotors/verify.hpp"

using namespace cyclotors;

struct cyc_config {
  FetchOptions fetch;
  TorsionOptions torsion;
  Format format = Format::Text;
  bool progress = false;
};

struct cyc_curve {
  EllipticCurve e;
  CurveInfo info;
};

struct cyc_torsion {
  TorsionGroup g;
  CurveInfo info;
};

namespace {

thread_local std::string last_error;

template <class F>
cyc_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return CYC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<cyc_status>(static_cast<int>(e.code()));
  } catch (const std::invalid_argument& e) {
    last_error = std::string("invalid argument: ") + e.what();
    return CYC_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CYC_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

const cyc_config& config_or_default(const cyc_config* c) {
  static const cyc_config def;
  return c ? *c : def;
}

std::string ainvs_text(const std::array<Rat, 5>& a) {
  std::string s = "[";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + to_string(a[i]);
  return s + "]";
}

}  // namespace

extern "C" {

const char* cyc_version(void) { return "0.1.0"; }
const char* cyc_last_error(void) { return last_error.c_str(); }

const char* cyc_status_name(cyc_status s) {
  if (s == CYC_OK) return "ok";
  if (s >= CYC_INVALID_ARGUMENT && s <= CYC_USAGE) return error_code_name(static_cast<ErrorCode>(s));
  return "internal";
}

void cyc_string_free(char* s) { std::free(s); }

cyc_status cyc_config_new(cyc_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new cyc_config;
  });
}

void cyc_config_free(cyc_config* c) { delete c; }

cyc_status cyc_config_set_offline(cyc_config* c, int offline) {
  return guard([&] {
    need(c, "config");
    c->fetch.offline = offline != 0;
  });
}

cyc_status cyc_config_set_cache(cyc_config* c, const char* path) {
  return guard([&] {
    need(c, "config");
    c->fetch.cache_path = path ? path : "";
  });
}

cyc_status cyc_config_set_api_base(cyc_config* c, const char* url) {
  return guard([&] {
    need(c, "config");
    c->fetch.api_base = url ? url : "";
  });
}

cyc_status cyc_config_set_prime_budget(cyc_config* c, int primes) {
  return guard([&] {
    need(c, "config");
    if (primes < 2) fail(ErrorCode::InvalidArgument, "prime budget must be at least 2");
    c->torsion.prime_budget = primes;
  });
}

cyc_status cyc_config_set_precision_cap(cyc_config* c, unsigned long bits) {
  return guard([&] {
    need(c, "config");
    if (bits < 64) fail(ErrorCode::InvalidArgument, "precision cap must be at least 64 bits");
    c->torsion.roots.precision_cap_bits = bits;
  });
}

cyc_status cyc_config_set_format(cyc_config* c, const char* format) {
  return guard([&] {
    need(c, "config");
    need(format, "format");
    c->format = parse_format(format);
  });
}

cyc_status cyc_config_set_progress(cyc_config* c, int to_stderr) {
  return guard([&] {
    need(c, "config");
    c->progress = to_stderr != 0;
  });
}

cyc_status cyc_curve_from_label(const cyc_config* c, const char* label, cyc_curve** out) {
  return guard([&] {
    need(label, "label");
    need(out, "out");
    CurveRecord r = fetch_curve(label, config_or_default(c).fetch);
    std::array<Rat, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = Rat(r.ainvs[i]);
    *out = new cyc_curve{r.curve(), {r.cremona_label, ainvs_text(a)}};
  });
}

cyc_status cyc_curve_from_ainvs(const char* ainvs, cyc_curve** out) {
  return guard([&] {
    need(ainvs, "ainvs");
    need(out, "out");
    std::string s(ainvs);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::array<Rat, 5> a;
    std::stringstream in(s);
    std::string tok;
    int k = 0;
    while (std::getline(in, tok, ',')) {
      if (k == 5) fail(ErrorCode::InvalidArgument, "expected five a-invariants");
      size_t b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) fail(ErrorCode::InvalidArgument, "empty a-invariant");
      a[k] = Rat(tok.substr(b, e - b + 1));
      a[k].canonicalize();
      ++k;
    }
    if (k != 5) fail(ErrorCode::InvalidArgument, "expected five a-invariants");
    *out = new cyc_curve{curve_from_ainvs(a), {"", ainvs_text(a)}};
  });
}

void cyc_curve_free(cyc_curve* e) { delete e; }

cyc_status cyc_curve_j_invariant(const cyc_curve* e, char** out) {
  return guard([&] {
    need(e, "curve");
    need(out, "out");
    *out = dup(to_string(e->e.j_invariant().rational_value()));
  });
}

cyc_status cyc_torsion_compute(const cyc_config* c, const cyc_curve* e, uint64_t n, cyc_torsion** out) {
  return guard([&] {
    need(e, "curve");
    need(out, "out");
    if (n < 1) fail(ErrorCode::InvalidArgument, "field conductor must be at least 1");
    const cyc_config& cfg = config_or_default(c);
    if (cfg.progress) std::cerr << "computing torsion over conductor " << n << '\n';
    *out = new cyc_torsion{torsion_structure(e->e, n, cfg.torsion), e->info};
  });
}

void cyc_torsion_free(cyc_torsion* t) { delete t; }

cyc_status cyc_torsion_invariants(const cyc_torsion* t, uint64_t* a, uint64_t* b) {
  return guard([&] {
    need(t, "torsion");
    if (a) *a = t->g.a;
    if (b) *b = t->g.b;
  });
}

cyc_status cyc_torsion_is_complete(const cyc_torsion* t, int* complete) {
  return guard([&] {
    need(t, "torsion");
    need(complete, "complete");
    *complete = t->g.complete ? 1 : 0;
  });
}

cyc_status cyc_torsion_render(const cyc_config* c, const cyc_torsion* t, char** out) {
  return guard([&] {
    need(t, "torsion");
    need(out, "out");
    *out = dup(render_torsion(t->info, t->g, config_or_default(c).format));
  });
}

cyc_status cyc_filter_render(const cyc_config* c, uint64_t n, char** out) {
  return guard([&] {
    need(out, "out");
    if (n < 1) fail(ErrorCode::InvalidArgument, "field conductor must be at least 1");
    *out = dup(render_filter(classify(n), config_or_default(c).format));
  });
}

cyc_status cyc_tables_render(const cyc_config* c, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(render_images(image_table(), config_or_default(c).format));
  });
}

cyc_status cyc_verify(const cyc_config* c, int criterion, char** out, int* passed) {
  return guard([&] {
    need(out, "out");
    if (criterion < 0 || criterion > kCriterionCount)
      fail(ErrorCode::InvalidArgument, "criterion must be between 0 and " + std::to_string(kCriterionCount));
    const cyc_config& cfg = config_or_default(c);
    VerifyOptions opt;
    opt.fetch = cfg.fetch;
    opt.torsion = cfg.torsion;
    opt.progress = cfg.progress ? &std::cerr : nullptr;
    std::vector<CriterionResult> rs;
    if (criterion == 0)
      rs = run_all_criteria(opt);
    else
      rs.push_back(run_criterion(criterion, opt));
    bool all = true;
    for (const auto& r : rs) all = all && r.pass;
    if (passed) *passed = all ? 1 : 0;
    *out = dup(render_verification(rs, cfg.format));
  });
}

}  // extern "C"
