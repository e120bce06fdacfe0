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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mirrorkit/errors.hpp"
#include "mirrorkit/instanton.hpp"
#include "mirrorkit/yukawa.hpp"

using namespace mirrorkit;
using testing::kCoupling;
using testing::kInstantons;
using testing::series_of;
using testing::series_of_text;

namespace {

int mobius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

yukawa::CouplingSeries coupling_of(const std::vector<std::string>& c)
{
    return {series_of_text(c)};
}

} // namespace

TEST_CASE("first-order equation for W")
{
    const int K = 12;
    const auto w = yukawa::coupling_ode_from_pf(pf::pf_operator(), K);
    // 5/(1 - 3125 z)
    std::vector<Rational> closed;
    Rational p(5);
    for (int k = 0; k <= K; ++k, p *= Rational(3125))
        closed.push_back(p);
    CHECK(w == TruncatedSeries(K, closed));
    CHECK(w[0] == Rational(5));

    const auto lhs = series_theta(series_log(series_div(w, TruncatedSeries::constant(5, K))));
    const auto rhs = series_div(series_of({0, 3125}, K), series_of({1, -3125}, K));
    CHECK(lhs == rhs);
}

TEST_CASE("period pairing reproduces W")
{
    const auto basis = pf::frobenius_basis(10);
    CHECK(yukawa::coupling_from_periods(basis) == yukawa::coupling_ode_from_pf(pf::pf_operator(), 10));
}

TEST_CASE("q-expansion of the coupling")
{
    const auto c = yukawa::normalized_yukawa_q_expansion(12);
    REQUIRE(c.order() == 12);
    for (int k = 0; k <= 12; ++k)
        CHECK(c[k].str() == kCoupling[k]);
}

TEST_CASE("short expansions")
{
    CHECK(testing::strings(yukawa::normalized_yukawa_q_expansion(0).coefficients) ==
          std::vector<std::string>{"5"});
    CHECK(testing::strings(yukawa::normalized_yukawa_q_expansion(2).coefficients) ==
          std::vector<std::string>{"5", "2875", "4876875"});
    CHECK(yukawa::normalized_yukawa_q_expansion(3)[3] == Rational::parse("8564575000"));
    CHECK_THROWS_AS(yukawa::normalized_yukawa_from_basis(pf::frobenius_basis(3), 3), Error);
    CHECK_THROWS_AS(yukawa::normalized_yukawa_q_expansion(-1), Error);
}

TEST_CASE("gauge examples")
{
    CHECK(yukawa::gauge_transform_check(TruncatedSeries::constant(1, 8), 8));
    CHECK(yukawa::gauge_transform_check(TruncatedSeries::constant(7, 8), 8));
    CHECK(yukawa::gauge_transform_check(series_of({1, 1}, 8), 8));
    CHECK_THROWS_AS(yukawa::gauge_transform_check(series_of({0, 1}, 8), 8), Error);
}

TEST_CASE("gauge by direct recomputation")
{
    const int K = 8;
    const auto basis = pf::frobenius_basis(K);
    const auto f = series_of({1, 1}, K);
    std::vector<LogSeries> scaled;
    for (const auto& s : basis.solutions())
        scaled.push_back(f * s.value);
    const auto before = yukawa::coupling_from_periods(basis);
    const auto after = yukawa::coupling_from_periods(scaled);
    CHECK(after == f * f * before);
    CHECK(yukawa::coupling_from_periods(scaled, Rational(1)) * TruncatedSeries::constant(5, K) == after);
}

TEST_CASE("property: gauge quadratic homogeneity at K = 8")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 6; ++trial)
        CHECK(yukawa::gauge_transform_check(testing::random_unit(rng, 8), 8));
}

TEST_CASE("instanton numbers")
{
    const auto table = instanton::extract_instanton_numbers(coupling_of(kCoupling));
    REQUIRE(table.max_degree() == 12);
    for (int d = 1; d <= 12; ++d) {
        const auto& e = table.at(d);
        CHECK(e.count.str() == kInstantons[d - 1]);
        CHECK(e.integral);
        CHECK(e.positive);
    }
    CHECK(table.at(1).count == Rational(2875));
    CHECK(table.at(2).count == Rational(609250));
    CHECK(table.at(3).count == Rational::parse("317206375"));
    CHECK_THROWS_AS(table.at(13), Error);
}

TEST_CASE("Moebius inversion oracle")
{
    const auto table = instanton::extract_instanton_numbers(coupling_of(kCoupling));
    for (int d = 1; d <= 12; ++d) {
        Rational s;
        for (int k = 1; k <= d; ++k)
            if (d % k == 0)
                s += Rational(mobius(d / k)) * Rational::parse(kCoupling[k]);
        CHECK(table.at(d).count * Rational(d * d * d) == s);
    }
}

TEST_CASE("prediction")
{
    instanton::InstantonTable one;
    one.entries.push_back({1, Rational(2875), Rational(2875), true, true});
    CHECK(instanton::predict_coupling_from_instantons(one, 1).coefficients == series_of({5, 2875}, 1));
    CHECK(instanton::predict_coupling_from_instantons({}, 0).coefficients == series_of({5}, 0));
    CHECK_THROWS_AS(instanton::predict_coupling_from_instantons(one, 2), Error);
}

TEST_CASE("round trip at K = 10")
{
    const auto c = yukawa::normalized_yukawa_q_expansion(10);
    const auto table = instanton::extract_instanton_numbers(c);
    CHECK(instanton::predict_coupling_from_instantons(table, 10).coefficients == c.coefficients);
}

TEST_CASE("divisibility audit")
{
    const auto c = coupling_of(kCoupling);
    const auto table = instanton::extract_instanton_numbers(c);
    const auto audit = instanton::divisibility_audit(c, table);
    CHECK(audit.all_pass());
    REQUIRE(audit.checks.size() == 12);
    CHECK(audit.checks[0].remainder.is_zero());
    CHECK(audit.checks[1].numerator == Rational(4876875 - 2875));
    CHECK(audit.checks[1].modulus == 8);
    CHECK(audit.checks[2].numerator == Rational::parse("8564575000") - Rational(2875));
    CHECK(audit.checks[2].modulus == 27);
    CHECK(audit.checks[2].divisible);

    const auto short_c = coupling_of({"5", "2875", "4876875"});
    CHECK_THROWS_AS(instanton::divisibility_audit(short_c, instanton::extract_instanton_numbers(short_c)), Error);
}

TEST_CASE("non-integral input")
{
    const auto c = coupling_of({"5", "1", "0"});
    CHECK_THROWS_AS(instanton::extract_instanton_numbers(c, true), Error);
    const auto table = instanton::extract_instanton_numbers(c, false);
    CHECK(table.at(2).count == Rational(Integer(-1), Integer(8)));
    CHECK_FALSE(table.at(2).integral);
    CHECK_FALSE(table.at(2).positive);

    try {
        instanton::extract_instanton_numbers(c, true);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonIntegral);
    }
    CHECK_THROWS_AS(instanton::extract_instanton_numbers(coupling_of({"4", "1"})), Error);
}
