// Copyright 2026 The sgap Authors
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

/* C interface to the sgap library. Every call returns an sgap_status;
 * on failure the thread's last error holds the kind, message and hint.
 * Strings returned through char** are owned by the caller and released
 * with sgap_string_free. */
#ifndef SGAP_SGAP_H_
#define SGAP_SGAP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SGAP_API __declspec(dllexport)
#else
#define SGAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sgap_gapset sgap_gapset;
typedef struct sgap_cover sgap_cover;

typedef enum sgap_status {
  SGAP_OK = 0,
  SGAP_ERR_PARSE = 1,
  SGAP_ERR_DOMAIN = 2,
  SGAP_ERR_HORIZON = 3,
  SGAP_ERR_UNDECIDABLE = 4,
  SGAP_ERR_EXCLUDED_POINT = 5,
  SGAP_ERR_OVERFLOW = 6,
  SGAP_ERR_NO_CONVERGENCE = 7,
  SGAP_ERR_INVALID_ARGUMENT = 8,
  SGAP_ERR_INTERNAL = 9
} sgap_status;

SGAP_API const char* sgap_version(void);
SGAP_API const char* sgap_status_name(sgap_status status);

/* Last error on this thread. The message pointer stays valid until the next
 * failing call on the same thread. */
SGAP_API const char* sgap_last_error_message(void);
/* {"error": kind, "message": ..., "hint": ...} */
SGAP_API sgap_status sgap_last_error_json(char** out);
SGAP_API void sgap_string_free(char* s);

/* Gap sets */
SGAP_API sgap_status sgap_gapset_parse(const char* spec, sgap_gapset** out);
SGAP_API void sgap_gapset_free(sgap_gapset* g);
SGAP_API sgap_status sgap_gapset_to_string(const sgap_gapset* g, char** out);
SGAP_API sgap_status sgap_gapset_contains(const sgap_gapset* g, int64_t n, int* out);
SGAP_API sgap_status sgap_mixing_gcd(const sgap_gapset* g, int64_t* out);
SGAP_API sgap_status sgap_classify_json(const sgap_gapset* g, char** out);
SGAP_API sgap_status sgap_conjugate_json(const sgap_gapset* a, const sgap_gapset* b, char** out);

/* Language and zeta */
SGAP_API sgap_status sgap_is_admissible(const sgap_gapset* g, const char* word, int* out);
SGAP_API sgap_status sgap_count_blocks(const sgap_gapset* g, unsigned n, uint64_t* out);
/* JSON array of |B_n| for n = 1..count */
SGAP_API sgap_status sgap_words_json(const sgap_gapset* g, unsigned count, char** out);
SGAP_API sgap_status sgap_periodic_points(const sgap_gapset* g, unsigned n, uint64_t* out);
SGAP_API sgap_status sgap_zeta_json(const sgap_gapset* g, unsigned order, char** out);
/* Runs the conjugacy code for {0,n} against its target on words up to L. */
SGAP_API sgap_status sgap_verify_conjugacy_code(int64_t n, unsigned L, int* passed);

/* Entropy */
SGAP_API sgap_status sgap_entropy(const sgap_gapset* g, double tol, double* lambda, double* h);
SGAP_API sgap_status sgap_entropy_bounds(const sgap_gapset* g, size_t k, double tol,
                                         double* lo, double* hi);
SGAP_API sgap_status sgap_entropy_truncations(const sgap_gapset* g, const size_t* ks,
                                              size_t count, double tol, double* out);
SGAP_API sgap_status sgap_entropy_json(const sgap_gapset* g, double tol, char** out);
SGAP_API sgap_status sgap_entropy_bounds_json(const sgap_gapset* g, size_t k, double tol,
                                              char** out);

/* Fischer cover */
SGAP_API sgap_status sgap_cover_build(const sgap_gapset* g, sgap_cover** out);
SGAP_API void sgap_cover_free(sgap_cover* c);
SGAP_API sgap_status sgap_cover_state_count(const sgap_cover* c, size_t* out);
SGAP_API sgap_status sgap_cover_period(const sgap_cover* c, int64_t* out);
SGAP_API sgap_status sgap_cover_spectral_radius(const sgap_cover* c, double* out);
/* *out = -1 when no delay up to max_delay works; max_delay < 0 picks the default cap. */
SGAP_API sgap_status sgap_cover_left_closing_delay(const sgap_cover* c, int64_t max_delay,
                                                   int64_t* out);
SGAP_API sgap_status sgap_cover_dot(const sgap_cover* c, char** out);
SGAP_API sgap_status sgap_cover_json(const sgap_cover* c, char** out);

/* Real-line parametrization. real uses the rat:/quad:/dec:/cf: forms. */
SGAP_API sgap_status sgap_real_to_set(const char* real, sgap_gapset** out);
SGAP_API sgap_status sgap_real_to_set_json(const char* real, char** out);
SGAP_API sgap_status sgap_real_from_set_json(const sgap_gapset* g, char** out);
SGAP_API sgap_status sgap_survey_json(uint64_t samples, unsigned horizon, uint64_t seed,
                                      char** out);

/* Runs a corpus manifest (JSON text). *all_passed is 1 only if every item passed. */
SGAP_API sgap_status sgap_corpus_run_json(const char* manifest, int* all_passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* SGAP_SGAP_H_ */
