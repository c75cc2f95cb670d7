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
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "cyclotors.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = "env -u CYCLOTORS_CACHE CYCLOTORS_LMFDB_URL=http://127.0.0.1:9 " + std::string(CYCLOTORS_CLI_PATH) +
                    " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

std::string take(char* s) {
  std::string r = s ? s : "";
  cyc_string_free(s);
  return r;
}

}  // namespace

TEST_CASE("status codes and error reporting") {
  CHECK(std::string(cyc_status_name(CYC_OK)) == "ok");
  CHECK(std::string(cyc_status_name(CYC_INTERNAL)) == "internal");
  CHECK(cyc_curve_from_ainvs(nullptr, nullptr) == CYC_INVALID_ARGUMENT);
  CHECK(has(cyc_last_error(), "null"));
  cyc_curve* e = nullptr;
  CHECK(cyc_curve_from_ainvs("0,0,0,0,0", &e) == CYC_SINGULAR_CURVE);
  CHECK(e == nullptr);
  CHECK(cyc_curve_from_ainvs("1,2", &e) == CYC_INVALID_ARGUMENT);
  CHECK(cyc_curve_from_ainvs("1,2,3,4,x", &e) == CYC_INVALID_ARGUMENT);
  cyc_config* c = nullptr;
  REQUIRE(cyc_config_new(&c) == CYC_OK);
  CHECK(cyc_config_set_format(c, "xml") == CYC_USAGE);
  CHECK(cyc_config_set_prime_budget(c, 1) == CYC_INVALID_ARGUMENT);
  CHECK(cyc_config_set_precision_cap(c, 8) == CYC_INVALID_ARGUMENT);
  CHECK(cyc_config_set_offline(c, 1) == CYC_OK);
  CHECK(cyc_curve_from_label(c, "11a4567", &e) == CYC_NOT_FOUND);
  CHECK(cyc_curve_from_label(c, "not a label", &e) == CYC_NOT_FOUND);
  cyc_config_free(c);
}

TEST_CASE("torsion through the C interface") {
  cyc_config* c = nullptr;
  REQUIRE(cyc_config_new(&c) == CYC_OK);
  cyc_config_set_offline(c, 1);
  cyc_config_set_format(c, "structured");
  cyc_curve* e = nullptr;
  REQUIRE(cyc_curve_from_label(c, "27a4", &e) == CYC_OK);
  char* j = nullptr;
  REQUIRE(cyc_curve_j_invariant(e, &j) == CYC_OK);
  CHECK(take(j) == "-12288000");
  cyc_torsion* t = nullptr;
  REQUIRE(cyc_torsion_compute(c, e, 27, &t) == CYC_OK);
  uint64_t a = 0, b = 0;
  int complete = 0;
  CHECK(cyc_torsion_invariants(t, &a, &b) == CYC_OK);
  CHECK(cyc_torsion_is_complete(t, &complete) == CYC_OK);
  CHECK(a == 1);
  CHECK(b == 27);
  CHECK(complete == 1);
  char* r1 = nullptr;
  char* r2 = nullptr;
  REQUIRE(cyc_torsion_render(c, t, &r1) == CYC_OK);
  REQUIRE(cyc_torsion_render(c, t, &r2) == CYC_OK);
  std::string s1 = take(r1), s2 = take(r2);
  CHECK(s1 == s2);
  CHECK(has(s1, "shape: C27\n"));
  CHECK(has(s1, "label: 27a4\n"));
  CHECK(has(s1, "status: complete\n"));
  CHECK(cyc_torsion_compute(c, e, 0, &t) == CYC_INVALID_ARGUMENT);
  cyc_torsion_free(t);
  cyc_curve_free(e);

  REQUIRE(cyc_curve_from_ainvs("[0, 0, 0, -11, 14]", &e) == CYC_OK);
  REQUIRE(cyc_torsion_compute(c, e, 8, &t) == CYC_OK);
  cyc_torsion_invariants(t, &a, &b);
  CHECK(a == 2);
  CHECK(b == 4);
  cyc_torsion_free(t);
  cyc_curve_free(e);
  cyc_config_free(c);
}

TEST_CASE("reports through the C interface") {
  cyc_config* c = nullptr;
  REQUIRE(cyc_config_new(&c) == CYC_OK);
  cyc_config_set_format(c, "structured");
  char* out = nullptr;
  REQUIRE(cyc_filter_render(c, 16, &out) == CYC_OK);
  std::string f = take(out);
  CHECK(has(f, "\nv\tC11\tELIMINATED\tdegree\t"));
  CHECK(has(f, "\nv\tC4+C4\tSURVIVES\t"));
  CHECK(has(f, "conflicts: 0\n"));
  REQUIRE(cyc_tables_render(c, &out) == CYC_OK);
  CHECK(has(take(out), "rows: 63\n"));
  int passed = 0;
  REQUIRE(cyc_verify(c, 8, &out, &passed) == CYC_OK);
  std::string v = take(out);
  CHECK(passed == 1);
  CHECK(has(v, "crit\t8\tPASS\t"));
  CHECK(cyc_verify(c, 11, &out, &passed) == CYC_INVALID_ARGUMENT);
  cyc_config_free(c);
}

TEST_CASE("command line") {
  Run r = run_cli("torsion --curve 27a4 --field 27 --offline");
  CHECK(r.code == 0);
  CHECK(has(r.out, "torsion: C27 "));
  CHECK(has(r.out, "status: complete"));

  r = run_cli("torsion --curve 32a4 --field 8 --offline");
  CHECK(r.code == 0);
  CHECK(has(r.out, "torsion: C2⊕C4 "));

  r = run_cli("filter --field 16");
  CHECK(r.code == 0);
  CHECK(has(r.out, "C11: ELIMINATED by degree"));

  Run s1 = run_cli("torsion --ainvs=1,1,1,-10,-10 --field 16 --format structured");
  Run s2 = run_cli("torsion --ainvs=1,1,1,-10,-10 --field 16 --format structured");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(has(s1.out, "shape: C4+C4\n"));

  CHECK(run_cli("tables --format structured").code == 0);
  CHECK(run_cli("verify-paper --criterion 8").code == 0);
  CHECK(run_cli("verify-paper --criterion 3 --offline").code == 1);

  CHECK(run_cli("torsion --field 16").code == 2);
  CHECK(run_cli("torsion --curve 11a1 --ainvs=0,-1,1,-10,-20 --field 16").code == 2);
  CHECK(run_cli("torsion --curve 11a1 --field 0").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("torsion --curve 11a4567 --field 5 --offline").code == 2);
  CHECK(run_cli("torsion --curve 10230bg2 --field 11").code == 3);
}
