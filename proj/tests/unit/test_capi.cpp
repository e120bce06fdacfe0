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

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "mirrorkit/mirrorkit.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    mk_string_free(s);
    return out;
}

std::vector<std::string> coeffs(const mk_series* s)
{
    std::vector<std::string> out;
    for (int k = 0; k <= mk_series_order(s); ++k) {
        char* c = nullptr;
        REQUIRE(mk_series_coefficient(s, k, &c) == MK_OK);
        out.push_back(take(c));
    }
    return out;
}

} // namespace

TEST_CASE("c api: version and status names")
{
    CHECK(std::strlen(mk_version()) > 0);
    CHECK(std::string(mk_status_name(MK_OK)) == "Ok");
    CHECK(std::string(mk_status_name(MK_ERR_NON_INTEGRAL)) == "NonIntegral");
    CHECK(std::string(mk_status_name(MK_ERR_NULL_POINTER)) == "NullPointer");
    CHECK(std::string(mk_status_name(static_cast<mk_status>(55))) == "Unknown");
}

TEST_CASE("c api: series")
{
    const char* one_minus_x[] = {"1", "-1"};
    mk_series* a = nullptr;
    REQUIRE(mk_series_new(4, one_minus_x, 2, &a) == MK_OK);
    const char* one[] = {"1"};
    mk_series* b = nullptr;
    REQUIRE(mk_series_new(4, one, 1, &b) == MK_OK);
    mk_series* q = nullptr;
    REQUIRE(mk_series_div(b, a, &q) == MK_OK);
    CHECK(coeffs(q) == std::vector<std::string>{"1", "1", "1", "1", "1"});

    mk_series* bad = nullptr;
    CHECK(mk_series_log(a, &bad) == MK_OK); // constant term 1
    mk_series_free(bad);
    mk_series* zero = nullptr;
    const char* x[] = {"0", "1"};
    REQUIRE(mk_series_new(4, x, 2, &zero) == MK_OK);
    CHECK(mk_series_div(b, zero, &bad) == MK_ERR_DIVISION_BY_NON_UNIT);
    CHECK(std::strlen(mk_last_error()) > 0);
    CHECK(mk_series_exp(a, &bad) == MK_ERR_BAD_CONSTANT_TERM);
    CHECK(mk_series_reversion(a, &bad) == MK_ERR_NOT_REVERSIBLE);
    mk_series* r = nullptr;
    REQUIRE(mk_series_reversion(zero, &r) == MK_OK);
    mk_series* c = nullptr;
    REQUIRE(mk_series_compose(zero, r, &c) == MK_OK);
    CHECK(coeffs(c) == std::vector<std::string>{"0", "1", "0", "0", "0"});

    const char* junk[] = {"1.5"};
    CHECK(mk_series_new(2, junk, 1, &bad) == MK_ERR_INVALID_ARGUMENT);
    CHECK(mk_series_new(2, nullptr, 1, &bad) == MK_ERR_NULL_POINTER);
    CHECK(mk_series_new(2, one, 1, nullptr) == MK_ERR_NULL_POINTER);
    char* s = nullptr;
    CHECK(mk_series_coefficient(a, 9, &s) == MK_ERR_INDEX_OUT_OF_RANGE);
    CHECK(mk_series_order(nullptr) == -1);

    for (auto* p : {a, b, q, zero, r, c})
        mk_series_free(p);
    mk_series_free(nullptr);
}

TEST_CASE("c api: periods to instantons")
{
    mk_frobenius_basis* basis = nullptr;
    REQUIRE(mk_frobenius_basis_compute(11, &basis) == MK_OK);
    CHECK(mk_frobenius_basis_order(basis) == 11);
    CHECK(mk_frobenius_basis_size(basis) == 4);
    int ok = 0;
    REQUIRE(mk_frobenius_basis_annihilated(basis, &ok) == MK_OK);
    CHECK(ok == 1);
    REQUIRE(mk_monodromy_shift_check(basis, &ok) == MK_OK);
    CHECK(ok == 1);

    // rebuild from components
    std::vector<mk_series*> parts(4);
    for (int k = 0; k < 4; ++k)
        REQUIRE(mk_frobenius_basis_component(basis, k, &parts[k]) == MK_OK);
    mk_frobenius_basis* rebuilt = nullptr;
    REQUIRE(mk_frobenius_basis_from_components(parts.data(), 4, &rebuilt) == MK_OK);
    mk_frobenius_basis* cut = nullptr;
    REQUIRE(mk_frobenius_basis_truncate(rebuilt, 3, &cut) == MK_OK);
    CHECK(mk_frobenius_basis_order(cut) == 3);

    mk_series *qz = nullptr, *zq = nullptr;
    REQUIRE(mk_mirror_map(cut, &qz, &zq) == MK_OK);
    CHECK(coeffs(qz) == std::vector<std::string>{"0", "1", "770", "1014275"});

    mk_series* kappa = nullptr;
    REQUIRE(mk_yukawa_from_basis(rebuilt, 10, 1, &kappa) == MK_OK);
    CHECK(coeffs(kappa)[2] == "4876875");
    mk_series* too_long = nullptr;
    CHECK(mk_yukawa_from_basis(rebuilt, 11, 1, &too_long) == MK_ERR_INVALID_ARGUMENT);

    mk_instanton_table* table = nullptr;
    REQUIRE(mk_instantons_extract(kappa, 1, &table) == MK_OK);
    CHECK(mk_instanton_table_max_degree(table) == 10);
    char* n = nullptr;
    int integral = 0, positive = 0;
    REQUIRE(mk_instanton_number(table, 2, &n, &integral, &positive) == MK_OK);
    CHECK(take(n) == "609250");
    CHECK(integral == 1);
    CHECK(positive == 1);
    CHECK(mk_instanton_number(table, 11, &n, nullptr, nullptr) == MK_ERR_INDEX_OUT_OF_RANGE);

    mk_series* predicted = nullptr;
    REQUIRE(mk_instantons_predict(table, 10, &predicted) == MK_OK);
    CHECK(coeffs(predicted) == coeffs(kappa));

    mk_report* audit = nullptr;
    REQUIRE(mk_instantons_audit(kappa, table, &audit) == MK_OK);
    CHECK(mk_report_check_count(audit) == 10);
    CHECK(mk_report_all_pass(audit) == 1);
    const char *group, *name, *detail;
    int passed = 0;
    REQUIRE(mk_report_check(audit, 2, &group, &name, &passed, &detail) == MK_OK);
    CHECK(std::string(group) == "divisibility");
    CHECK(std::string(name) == "degree_3");
    CHECK(std::string(detail) == "8564572125 mod 27 = 0");
    CHECK(mk_report_check(audit, 10, &group, &name, &passed, &detail) == MK_ERR_INDEX_OUT_OF_RANGE);

    int gauge_ok = 0;
    const char* f[] = {"1", "1"};
    mk_series* g = nullptr;
    REQUIRE(mk_series_new(6, f, 2, &g) == MK_OK);
    REQUIRE(mk_yukawa_gauge_check(g, 6, &gauge_ok) == MK_OK);
    CHECK(gauge_ok == 1);

    mk_report_free(audit);
    mk_instanton_table_free(table);
    for (auto* p : parts)
        mk_series_free(p);
    for (auto* p : {qz, zq, kappa, predicted, g})
        mk_series_free(p);
    mk_frobenius_basis_free(cut);
    mk_frobenius_basis_free(rebuilt);
    mk_frobenius_basis_free(basis);
}

TEST_CASE("c api: strict integrality")
{
    const char* c[] = {"5", "1", "0"};
    mk_series* s = nullptr;
    REQUIRE(mk_series_new(2, c, 3, &s) == MK_OK);
    mk_instanton_table* t = nullptr;
    CHECK(mk_instantons_extract(s, 1, &t) == MK_ERR_NON_INTEGRAL);
    REQUIRE(mk_instantons_extract(s, 0, &t) == MK_OK);
    char* n = nullptr;
    int integral = 1;
    REQUIRE(mk_instanton_number(t, 2, &n, &integral, nullptr) == MK_OK);
    CHECK(take(n) == "-1/8");
    CHECK(integral == 0);
    mk_instanton_table_free(t);
    mk_series_free(s);
}

TEST_CASE("c api: monodromy report")
{
    mk_report* r = nullptr;
    REQUIRE(mk_monodromy_report(&r) == MK_OK);
    CHECK(mk_report_all_pass(r) == 1);
    CHECK(mk_report_check_count(r) > 30);
    std::string g1, dims;
    for (size_t i = 0; i < mk_report_value_count(r); ++i) {
        const char *k, *v;
        REQUIRE(mk_report_value(r, i, &k, &v) == MK_OK);
        if (std::string(k) == "g1")
            g1 = v;
        if (std::string(k) == "weight_dimensions")
            dims = v;
    }
    CHECK(g1 == "2*alpha_1+beta^1");
    CHECK(dims == "1,1,2,2,3,3,4");
    mk_report_free(r);
    CHECK(mk_report_all_pass(nullptr) == 0);
}

TEST_CASE("c api: fans")
{
    mk_fan* sigma = nullptr;
    REQUIRE(mk_fan_quotient_cone(&sigma) == MK_OK);
    CHECK(mk_fan_cone_count(sigma) == 1);
    const long rays[] = {3, 1, 1, 1, 3, 1, 1, 1, 3};
    mk_fan* star = nullptr;
    REQUIRE(mk_fan_star_subdivide(sigma, rays, 3, &star) == MK_OK);
    CHECK(mk_fan_ray_count(star) == 6);
    const long outside[] = {2, 1, 1};
    mk_fan* bad = nullptr;
    CHECK(mk_fan_star_subdivide(sigma, outside, 1, &bad) == MK_ERR_INVALID_ARGUMENT);

    mk_fan* f = nullptr;
    mk_report* r = nullptr;
    REQUIRE(mk_fan_pipeline_step("III", &f, &r) == MK_OK);
    CHECK(mk_report_all_pass(r) == 1);
    CHECK(mk_fan_cone_count(f) == 25);
    CHECK(mk_fan_ray_count(f) == 21);
    long v[3];
    REQUIRE(mk_fan_cone_ray(f, 0, 2, v) == MK_OK);
    CHECK(v[0] + v[1] + v[2] == 5);
    CHECK(mk_fan_cone_ray(f, 25, 0, v) == MK_ERR_INDEX_OUT_OF_RANGE);
    CHECK(mk_fan_ray(f, 21, v) == MK_ERR_INDEX_OUT_OF_RANGE);
    CHECK(mk_fan_cone_size(f, 3) == 3);

    mk_report* verify = nullptr;
    REQUIRE(mk_fan_verify(f, &verify) == MK_OK);
    CHECK(mk_report_check_count(verify) == 0);
    const char *k, *val;
    REQUIRE(mk_report_value(verify, 0, &k, &val) == MK_OK);
    CHECK(std::string(k) == "smooth");
    CHECK(std::string(val) == "true");

    char* svg = nullptr;
    REQUIRE(mk_fan_slice_svg(f, "t", &svg) == MK_OK);
    CHECK(take(svg).find("<svg") != std::string::npos);

    mk_fan* g = nullptr;
    mk_report* gr = nullptr;
    CHECK(mk_fan_pipeline_step("IV", &g, &gr) == MK_ERR_INVALID_ARGUMENT);
    CHECK(mk_fan_pipeline_step(nullptr, &g, &gr) == MK_ERR_NULL_POINTER);

    mk_report_free(verify);
    mk_report_free(r);
    mk_fan_free(f);
    mk_fan_free(star);
    mk_fan_free(sigma);
}
