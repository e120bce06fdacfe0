/*
 * Copyright 2026 The mirrorkit Authors
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

/*
 * C interface to libmirrorkit.
 *
 * Every object is an opaque handle released with its matching *_free
 * function (NULL is accepted). Functions return an mk_status; on failure
 * mk_last_error() describes the problem for the calling thread. Exact numbers
 * cross the boundary as decimal strings "p" or "p/q". Strings returned
 * through char** are heap-allocated and must be released with
 * mk_string_free. Borrowed const char* results stay valid until the owning
 * handle is freed.
 */

#ifndef MIRRORKIT_H
#define MIRRORKIT_H

#include <stddef.h>

#if defined(_WIN32)
#define MK_API __declspec(dllexport)
#else
#define MK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mk_status {
    MK_OK = 0,
    MK_ERR_INVALID_ARGUMENT = 1,
    MK_ERR_DIVISION_BY_NON_UNIT = 2,
    MK_ERR_BAD_CONSTANT_TERM = 3,
    MK_ERR_NOT_REVERSIBLE = 4,
    MK_ERR_RECURRENCE_BREAKDOWN = 5,
    MK_ERR_NON_INTEGRAL = 6,
    MK_ERR_NOT_UNIPOTENT = 7,
    MK_ERR_NOT_NILPOTENT = 8,
    MK_ERR_NO_UNIMODULAR_PARTNER = 9,
    MK_ERR_RAY_OUTSIDE_SUPPORT = 10,
    MK_ERR_CHECK_FAILED = 11,
    MK_ERR_INDEX_OUT_OF_RANGE = 12,
    MK_ERR_NULL_POINTER = 97,
    MK_ERR_OUT_OF_MEMORY = 98,
    MK_ERR_INTERNAL = 99
} mk_status;

MK_API const char* mk_version(void);
MK_API const char* mk_status_name(mk_status status);
MK_API const char* mk_last_error(void);
MK_API void mk_string_free(char* s);

/* ---- truncated power series ------------------------------------------- */

typedef struct mk_series mk_series;

/* count <= order + 1 coefficients, the rest are zero. */
MK_API mk_status mk_series_new(int order, const char* const* coefficients, size_t count, mk_series** out);
MK_API void mk_series_free(mk_series* s);
MK_API int mk_series_order(const mk_series* s);
MK_API mk_status mk_series_coefficient(const mk_series* s, int k, char** out);
MK_API mk_status mk_series_mul(const mk_series* a, const mk_series* b, mk_series** out);
MK_API mk_status mk_series_div(const mk_series* a, const mk_series* b, mk_series** out);
MK_API mk_status mk_series_exp(const mk_series* a, mk_series** out);
MK_API mk_status mk_series_log(const mk_series* a, mk_series** out);
MK_API mk_status mk_series_reversion(const mk_series* a, mk_series** out);
/* a(b(x)); b must have zero constant term. */
MK_API mk_status mk_series_compose(const mk_series* a, const mk_series* b, mk_series** out);

/* ---- periods ------------------------------------------------------------ */

typedef struct mk_frobenius_basis mk_frobenius_basis;

/* Canonical text of the built-in Picard-Fuchs operator. */
MK_API mk_status mk_pf_operator_text(char** out);
MK_API mk_status mk_frobenius_basis_compute(int order, mk_frobenius_basis** out);
/* Rebuilds a basis from its component series S_0 .. S_{count-1}. */
MK_API mk_status mk_frobenius_basis_from_components(const mk_series* const* components, size_t count,
                                                    mk_frobenius_basis** out);
MK_API void mk_frobenius_basis_free(mk_frobenius_basis* b);
MK_API int mk_frobenius_basis_order(const mk_frobenius_basis* b);
MK_API int mk_frobenius_basis_size(const mk_frobenius_basis* b);
MK_API mk_status mk_frobenius_basis_component(const mk_frobenius_basis* b, int k, mk_series** out);
MK_API mk_status mk_frobenius_basis_truncate(const mk_frobenius_basis* b, int order, mk_frobenius_basis** out);
/* *out = 1 when the operator annihilates every solution through the order. */
MK_API mk_status mk_frobenius_basis_annihilated(const mk_frobenius_basis* b, int* out);

/* ---- mirror map --------------------------------------------------------- */

MK_API mk_status mk_mirror_map(const mk_frobenius_basis* b, mk_series** q_of_z, mk_series** z_of_q);
MK_API mk_status mk_monodromy_shift_check(const mk_frobenius_basis* b, int* out);

/* ---- Yukawa coupling ---------------------------------------------------- */

/* The basis must have order >= max(order, 2) + 1. With strict, a fractional
 * coefficient fails with MK_ERR_NON_INTEGRAL. */
MK_API mk_status mk_yukawa_from_basis(const mk_frobenius_basis* b, int order, int strict, mk_series** out);
MK_API mk_status mk_yukawa_gauge_check(const mk_series* gauge, int order, int* out);

/* ---- instanton numbers -------------------------------------------------- */

typedef struct mk_instanton_table mk_instanton_table;

MK_API mk_status mk_instantons_extract(const mk_series* coupling, int strict, mk_instanton_table** out);
MK_API void mk_instanton_table_free(mk_instanton_table* t);
MK_API int mk_instanton_table_max_degree(const mk_instanton_table* t);
/* integral and positive may be NULL. */
MK_API mk_status mk_instanton_number(const mk_instanton_table* t, int degree, char** out, int* integral,
                                     int* positive);
MK_API mk_status mk_instantons_predict(const mk_instanton_table* t, int order, mk_series** out);

/* ---- reports: named checks plus key/value data -------------------------- */

typedef struct mk_report mk_report;

MK_API void mk_report_free(mk_report* r);
MK_API size_t mk_report_check_count(const mk_report* r);
MK_API mk_status mk_report_check(const mk_report* r, size_t i, const char** group, const char** name, int* passed,
                                 const char** detail);
MK_API size_t mk_report_value_count(const mk_report* r);
MK_API mk_status mk_report_value(const mk_report* r, size_t i, const char** key, const char** value);
/* 1 when every check passed. */
MK_API int mk_report_all_pass(const mk_report* r);

/* Divisibility audit: one check per degree, group "divisibility". */
MK_API mk_status mk_instantons_audit(const mk_series* coupling, const mk_instanton_table* t, mk_report** out);

/* Quintic-mirror monodromy identities; check groups log, basis, filtration,
 * lemmas. Never fails on a mismatch: mismatches are failed checks. */
MK_API mk_status mk_monodromy_report(mk_report** out);

/* ---- toric resolution --------------------------------------------------- */

typedef struct mk_fan mk_fan;

MK_API mk_status mk_fan_quotient_cone(mk_fan** out);
/* rays holds count triples. */
MK_API mk_status mk_fan_star_subdivide(const mk_fan* f, const long* rays, size_t count, mk_fan** out);
/* step is "I", "IIA", "IIB" or "III". The report holds the checks of every
 * step up to and including this one (group = step name). */
MK_API mk_status mk_fan_pipeline_step(const char* step, mk_fan** fan, mk_report** report);
MK_API void mk_fan_free(mk_fan* f);
MK_API size_t mk_fan_ray_count(const mk_fan* f);
MK_API mk_status mk_fan_ray(const mk_fan* f, size_t i, long out[3]);
MK_API size_t mk_fan_cone_count(const mk_fan* f);
MK_API size_t mk_fan_cone_size(const mk_fan* f, size_t i);
MK_API mk_status mk_fan_cone_ray(const mk_fan* f, size_t i, size_t j, long out[3]);
/* Structural verification as report values only (no checks): smooth,
 * crepant, simplicial, valid, cone_count, ray_count; booleans are "true" or
 * "false". */
MK_API mk_status mk_fan_verify(const mk_fan* f, mk_report** out);
MK_API mk_status mk_fan_slice_svg(const mk_fan* f, const char* title, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MIRRORKIT_H */
