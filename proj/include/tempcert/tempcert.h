// Copyright 2026 The tempcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPCERT_TEMPCERT_H
#define TEMPCERT_TEMPCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TEMPCERT_BUILDING_LIBRARY)
#define TC_API __declspec(dllexport)
#else
#define TC_API __declspec(dllimport)
#endif
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INVALID_ARGUMENT = 1,
    TC_ERR_SCHEMA = 2,
    TC_ERR_VALIDATION = 3,
    TC_ERR_IO = 4,
    TC_ERR_NUMERIC = 5,
    TC_ERR_INTERNAL = 6
} tc_status;

typedef enum tc_format { TC_FORMAT_JSON = 0, TC_FORMAT_TABLE = 1 } tc_format;

typedef enum tc_flavor { TC_FLAVOR_TEMPORAL = 0, TC_FLAVOR_NONCONTEXTUAL = 1 } tc_flavor;

typedef struct tc_realization tc_realization;
typedef struct tc_inequality tc_inequality;

typedef struct tc_tolerances {
    double relation;
    double rank;
    double unitary;
} tc_tolerances;

/* Every function returning tc_status leaves a message for tc_last_error() on
 * failure. The message is per thread and valid until the next failing call. */
TC_API const char *tc_version(void);
TC_API const char *tc_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TC_API void tc_string_free(char *text);

/* Largest n for which dense 2^n matrices are built (default 12). */
TC_API tc_status tc_set_dense_limit(int n);

TC_API tc_status tc_realization_load_file(const char *path, tc_realization **out);
TC_API tc_status tc_realization_from_json(const char *text, tc_realization **out);
TC_API tc_status tc_realization_canonical(int n, tc_realization **out);
TC_API tc_status tc_realization_to_json(const tc_realization *real, char **out);
TC_API tc_status tc_realization_info(const tc_realization *real, int *n, int *dim, int *floating);
/* Hermitian involutions, normalized state, matching shapes. operator_tol <= 0
 * picks 1e-8, or 1e-6 for inputs of floating provenance. */
TC_API tc_status tc_realization_validate(const tc_realization *real, double operator_tol);
TC_API void tc_realization_free(tc_realization *real);

TC_API tc_status tc_inequality_build(int n, tc_flavor flavor, tc_inequality **out);
TC_API tc_status tc_inequality_load_file(const char *path, tc_inequality **out);
TC_API tc_status tc_inequality_from_json(const char *text, tc_inequality **out);
TC_API tc_status tc_inequality_to_json(const tc_inequality *ineq, char **out);
TC_API tc_status tc_inequality_info(const tc_inequality *ineq, int *n, size_t *terms);
TC_API void tc_inequality_free(tc_inequality *ineq);

TC_API tc_status tc_bound_formulas(int n, int64_t *eta_c, int64_t *eta_q, int64_t *alpha);
/* Exact maximum over +-1 assignments; TC_ERR_INVALID_ARGUMENT past 24 labels. */
TC_API tc_status tc_classical_bound(const tc_inequality *ineq, unsigned workers, int64_t *value);
/* Formula bounds plus a brute-force confirmation when the label count allows. */
TC_API tc_status tc_bounds_report(int n, unsigned workers, tc_format format, char **out);

TC_API tc_status tc_evaluate(const tc_inequality *ineq, const tc_realization *real, unsigned workers,
                             tc_format format, char **report, double *total);

/* real may be NULL; otherwise its provenance selects the defaults. */
TC_API tc_status tc_default_tolerances(const tc_realization *real, tc_tolerances *out);
/* tol may be NULL for the defaults. all_stages != 0 keeps going past the
 * first failing stage. */
TC_API tc_status tc_certify(const tc_realization *real, const tc_tolerances *tol, unsigned workers, int all_stages,
                            tc_format format, char **report, int *passed);

TC_API tc_status tc_write_fixtures(const char *directory, uint64_t seed, char **manifest);
TC_API uint64_t tc_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif
