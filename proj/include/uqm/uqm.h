/* Copyright 2026 <project authors>
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the library. Every call returns a status code; on failure
 * uqm_last_error() describes the problem for the calling thread. Results are
 * returned through opaque handles released with uqm_result_destroy(). */

#ifndef UQM_UQM_H
#define UQM_UQM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(UQM_BUILDING_LIBRARY)
#define UQM_API __declspec(dllexport)
#else
#define UQM_API __declspec(dllimport)
#endif
#else
#define UQM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uqm_status {
  UQM_OK = 0,
  UQM_ERR_ARGUMENT = 1,
  UQM_ERR_POSITIVITY = 2,
  UQM_ERR_DEGENERATE = 3,
  UQM_ERR_PRECONDITION = 4,
  UQM_ERR_UNSUPPORTED = 5,
  UQM_ERR_SIZE = 6,
  UQM_ERR_NUMERIC = 7,
  UQM_ERR_NULL = 8,
  UQM_ERR_INTERNAL = 9
} uqm_status;

/* Named numbers, named strings and an optional table. */
typedef struct uqm_result uqm_result;

UQM_API const char* uqm_version(void);
UQM_API const char* uqm_last_error(void);
UQM_API const char* uqm_status_name(uqm_status s);
UQM_API double uqm_get_tolerance(void);
UQM_API uqm_status uqm_set_tolerance(double tol);

UQM_API void uqm_result_destroy(uqm_result* r);
UQM_API size_t uqm_result_value_count(const uqm_result* r);
UQM_API const char* uqm_result_value_name(const uqm_result* r, size_t i);
UQM_API double uqm_result_value_at(const uqm_result* r, size_t i);
UQM_API uqm_status uqm_result_value(const uqm_result* r, const char* name, double* out);
UQM_API size_t uqm_result_string_count(const uqm_result* r);
UQM_API const char* uqm_result_string_name(const uqm_result* r, size_t i);
UQM_API const char* uqm_result_string_at(const uqm_result* r, size_t i);
/* Preformatted text: CSV for figures, report lines for acceptance. */
UQM_API const char* uqm_result_text(const uqm_result* r);
UQM_API size_t uqm_result_rows(const uqm_result* r);
UQM_API size_t uqm_result_columns(const uqm_result* r);
UQM_API const char* uqm_result_column_name(const uqm_result* r, size_t col);
UQM_API double uqm_result_cell(const uqm_result* r, size_t row, size_t col);

/* Optimal unambiguous discrimination of two pure states with overlap
 * modulus lambda. Values: P_D, c1, c2; strings: regime. */
UQM_API uqm_status uqm_usd_idp(double lambda, double eta1, uqm_result** out);

/* Haar-random unitary pair in dimension d. Values: F, P_usd, F_diagonal_search,
 * origin_in_hull. */
UQM_API uqm_status uqm_channels_fidelity(int d, double eta_u, uint64_t seed, uqm_result** out);
/* Universal unitary comparator. Values: P_closed, P_mc, P_mc_stderr,
 * no_error_max. */
UQM_API uqm_status uqm_channels_compare(int d, long samples, uint64_t seed, uqm_result** out);

/* Labeled comparison with the antisymmetric test state. Values: P_closed,
 * P_mc, P_mc_stderr, q_same_example. */
UQM_API uqm_status uqm_meas_compare_labeled(int d, long samples, uint64_t seed, uqm_result** out);
/* Unlabeled qubit comparison at angle theta between the two bases.
 * Values: P, P_closed, P_haar_mc, P_haar_mc_stderr, P_haar_closed, P_diffdiff. */
UQM_API uqm_status uqm_meas_compare_unlabeled(int d, double theta, long samples, uint64_t seed, uqm_result** out);
UQM_API uqm_status uqm_meas_audit_subspaces(uqm_result** out);

/* range may be NULL ("lo:hi:step" otherwise); rounds may be NULL. */
UQM_API uqm_status uqm_figure(const char* id, const char* range, const int* rounds, size_t n_rounds, double gamma,
                              uqm_result** out);
/* Comma separated list of figure identifiers. */
UQM_API const char* uqm_figure_ids(void);

/* Values: passed, failed, criterion_<n> (1 or 0). Text: report lines. */
UQM_API uqm_status uqm_acceptance(const char* suite, uint64_t seed, uqm_result** out);

#ifdef __cplusplus
}
#endif

#endif /* UQM_UQM_H */
