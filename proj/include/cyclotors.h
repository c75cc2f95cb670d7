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

#ifndef CYCLOTORS_H_
#define CYCLOTORS_H_

#include <stdint.h>

#if defined(CYCLOTORS_BUILD)
#define CYC_API __attribute__((visibility("default")))
#else
#define CYC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..11 match the library's error kinds. */
typedef enum cyc_status {
  CYC_OK = 0,
  CYC_INVALID_ARGUMENT = 1,
  CYC_DIVISION_BY_ZERO = 2,
  CYC_RAMIFIED_PRIME = 3,
  CYC_BAD_PRIME = 4,
  CYC_SINGULAR_ROOT = 5,
  CYC_SINGULAR_CURVE = 6,
  CYC_BAD_REDUCTION = 7,
  CYC_CONFIGURATION = 8,
  CYC_NOT_FOUND = 9,
  CYC_TRANSPORT = 10,
  CYC_USAGE = 11,
  CYC_INTERNAL = 100
} cyc_status;

typedef struct cyc_config cyc_config;
typedef struct cyc_curve cyc_curve;
typedef struct cyc_torsion cyc_torsion;

CYC_API const char* cyc_version(void);
/* Message for the last failing call on this thread; never null. */
CYC_API const char* cyc_last_error(void);
CYC_API const char* cyc_status_name(cyc_status s);
CYC_API void cyc_string_free(char* s);

CYC_API cyc_status cyc_config_new(cyc_config** out);
CYC_API void cyc_config_free(cyc_config* c);
CYC_API cyc_status cyc_config_set_offline(cyc_config* c, int offline);
CYC_API cyc_status cyc_config_set_cache(cyc_config* c, const char* path);
CYC_API cyc_status cyc_config_set_api_base(cyc_config* c, const char* url);
CYC_API cyc_status cyc_config_set_prime_budget(cyc_config* c, int primes);
CYC_API cyc_status cyc_config_set_precision_cap(cyc_config* c, unsigned long bits);
/* "text" or "structured". */
CYC_API cyc_status cyc_config_set_format(cyc_config* c, const char* format);
CYC_API cyc_status cyc_config_set_progress(cyc_config* c, int to_stderr);

CYC_API cyc_status cyc_curve_from_label(const cyc_config* c, const char* label, cyc_curve** out);
/* Five rationals such as "-10" or "1/4", or one comma list "0,-1,1,-10,-20". */
CYC_API cyc_status cyc_curve_from_ainvs(const char* ainvs, cyc_curve** out);
CYC_API void cyc_curve_free(cyc_curve* e);
CYC_API cyc_status cyc_curve_j_invariant(const cyc_curve* e, char** out);

CYC_API cyc_status cyc_torsion_compute(const cyc_config* c, const cyc_curve* e, uint64_t n, cyc_torsion** out);
CYC_API void cyc_torsion_free(cyc_torsion* t);
/* The group is C_a + C_b with a | b. */
CYC_API cyc_status cyc_torsion_invariants(const cyc_torsion* t, uint64_t* a, uint64_t* b);
CYC_API cyc_status cyc_torsion_is_complete(const cyc_torsion* t, int* complete);
CYC_API cyc_status cyc_torsion_render(const cyc_config* c, const cyc_torsion* t, char** out);

CYC_API cyc_status cyc_filter_render(const cyc_config* c, uint64_t n, char** out);
CYC_API cyc_status cyc_tables_render(const cyc_config* c, char** out);
/* criterion 0 runs all. *passed is 1 iff every criterion run passed. */
CYC_API cyc_status cyc_verify(const cyc_config* c, int criterion, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
