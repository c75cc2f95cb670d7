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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "cyclotors.h"

namespace {

struct Common {
  bool offline = false;
  std::string cache;
  std::string format = "text";
  int primes = 8;
  unsigned long precision_cap = 6644;
};

int exit_code(cyc_status s) {
  switch (s) {
    case CYC_OK:
      return 0;
    case CYC_TRANSPORT:
      return 3;
    case CYC_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

int report_error(cyc_status s) {
  std::fprintf(stderr, "error (%s): %s\n", cyc_status_name(s), cyc_last_error());
  return exit_code(s);
}

class Config {
 public:
  Config() {
    if (cyc_config_new(&c_) != CYC_OK) c_ = nullptr;
  }
  ~Config() { cyc_config_free(c_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
  cyc_config* get() const { return c_; }

  cyc_status apply(const Common& o) {
    if (!c_) return CYC_INTERNAL;
    cyc_status s = CYC_OK;
    if ((s = cyc_config_set_offline(c_, o.offline))) return s;
    if (!o.cache.empty() && (s = cyc_config_set_cache(c_, o.cache.c_str()))) return s;
    if ((s = cyc_config_set_format(c_, o.format.c_str()))) return s;
    if ((s = cyc_config_set_prime_budget(c_, o.primes))) return s;
    if ((s = cyc_config_set_precision_cap(c_, o.precision_cap))) return s;
    return cyc_config_set_progress(c_, 1);
  }

 private:
  cyc_config* c_ = nullptr;
};

int print_and_free(char* s) {
  std::fputs(s, stdout);
  cyc_string_free(s);
  return 0;
}

void add_common(CLI::App* sub, Common& o, bool network) {
  sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  if (!network) return;
  sub->add_flag("--offline", o.offline, "use bundled fixtures only");
  sub->add_option("--cache", o.cache, "curve cache file (default: $CYCLOTORS_CACHE)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of elliptic curves over cyclotomic fields"};
  app.require_subcommand(1);

  Common o;
  std::string label, ainvs;
  uint64_t field = 0;
  int criterion = 0;

  auto* torsion = app.add_subcommand("torsion", "torsion subgroup of E over Q(zeta_N)");
  auto* c = torsion->add_option("--curve", label, "curve label, e.g. 27a4");
  auto* a = torsion->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6");
  c->excludes(a);
  torsion->add_option("--field", field, "conductor N of Q(zeta_N)")->required()->check(CLI::PositiveNumber);
  torsion->add_option("--primes", o.primes, "good primes used for the bound")->check(CLI::Range(2, 200));
  torsion->add_option("--precision-cap", o.precision_cap, "p-adic precision cap in bits")
      ->check(CLI::Range(64ul, 1ul << 20));
  add_common(torsion, o, true);

  auto* filter = app.add_subcommand("filter", "classification report over Q(zeta_N)");
  filter->add_option("--field", field, "conductor N")->required()->check(CLI::PositiveNumber);
  add_common(filter, o, false);

  auto* tables = app.add_subcommand("tables", "mod-p image records");
  add_common(tables, o, false);

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria");
  verify->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, 10));
  verify->add_option("--precision-cap", o.precision_cap, "p-adic precision cap in bits")
      ->check(CLI::Range(64ul, 1ul << 20));
  add_common(verify, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (torsion->parsed() && label.empty() == ainvs.empty()) {
    std::fprintf(stderr, "error: exactly one of --curve and --ainvs is required\n");
    return 2;
  }

  Config cfg;
  if (cyc_status s = cfg.apply(o)) return report_error(s);
  char* out = nullptr;

  if (torsion->parsed()) {
    cyc_curve* e = nullptr;
    cyc_status s = label.empty() ? cyc_curve_from_ainvs(ainvs.c_str(), &e)
                                 : cyc_curve_from_label(cfg.get(), label.c_str(), &e);
    if (s) return report_error(s);
    cyc_torsion* t = nullptr;
    s = cyc_torsion_compute(cfg.get(), e, field, &t);
    cyc_curve_free(e);
    if (s) return report_error(s);
    s = cyc_torsion_render(cfg.get(), t, &out);
    cyc_torsion_free(t);
    if (s) return report_error(s);
    return print_and_free(out);
  }
  if (filter->parsed()) {
    if (cyc_status s = cyc_filter_render(cfg.get(), field, &out)) return report_error(s);
    return print_and_free(out);
  }
  if (tables->parsed()) {
    if (cyc_status s = cyc_tables_render(cfg.get(), &out)) return report_error(s);
    return print_and_free(out);
  }
  int passed = 0;
  if (cyc_status s = cyc_verify(cfg.get(), criterion, &out, &passed)) return report_error(s);
  print_and_free(out);
  return passed ? 0 : 1;
}
