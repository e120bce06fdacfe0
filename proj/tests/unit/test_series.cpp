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
#include "mirrorkit/log_series.hpp"
#include "mirrorkit/series.hpp"

using namespace mirrorkit;
using testing::random_series;
using testing::random_unit;
using testing::series_of;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("rational canonical form")
{
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.str() == "-3/2");
    CHECK(r.is_canonical());
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("-0/7").str() == "0");
    CHECK(Rational::parse("123456789012345678901234567890").is_integer());
    CHECK(code_of([] { Rational::parse("1.5"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Rational(Integer(1), Integer(0)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Rational(1) / Rational(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("multiplication examples")
{
    const auto p = series_of({1, 1}, 5) * series_of({1, -1}, 5);
    CHECK(p == series_of({1, 0, -1}, 5));

    std::vector<Rational> ones(9, Rational(1));
    const TruncatedSeries geometric(8, ones);
    CHECK(geometric * series_of({1, -1}, 8) == TruncatedSeries::constant(1, 8));

    // truncation to the smaller order
    const auto mixed = series_of({1, 1}, 3) * series_of({1, 1}, 7);
    CHECK(mixed.order() == 3);
}

TEST_CASE("division examples")
{
    CHECK(series_div(TruncatedSeries::constant(1, 4), series_of({1, -1}, 4)) == series_of({1, 1, 1, 1, 1}, 4));
    CHECK(code_of([] { series_div(series_of({1}, 3), series_of({0, 1}, 3)); }) == ErrorCode::DivisionByNonUnit);
}

TEST_CASE("exp and log examples")
{
    CHECK(series_exp(TruncatedSeries(6)) == TruncatedSeries::constant(1, 6));
    CHECK(series_log(TruncatedSeries::constant(1, 6)).is_zero());
    const auto one_plus_x = series_of({1, 1}, 10);
    CHECK(series_exp(series_log(one_plus_x)) == one_plus_x);
    CHECK(series_log(one_plus_x * one_plus_x) == Rational(2) * series_log(one_plus_x));
    CHECK(code_of([] { series_exp(series_of({1, 1}, 3)); }) == ErrorCode::BadConstantTerm);
    CHECK(code_of([] { series_log(series_of({2, 1}, 3)); }) == ErrorCode::BadConstantTerm);
}

TEST_CASE("reversion examples")
{
    const auto z = TruncatedSeries::variable(8);
    CHECK(series_reversion(z) == z);

    // z/(1-z) and q/(1+q)
    const auto a = series_div(z, series_of({1, -1}, 8));
    const auto b = series_div(z, series_of({1, 1}, 8));
    CHECK(series_reversion(a) == b);

    CHECK(code_of([] { series_reversion(series_of({0, 0, 1}, 4)); }) == ErrorCode::NotReversible);
    CHECK(code_of([] { series_reversion(series_of({1, 1}, 4)); }) == ErrorCode::NotReversible);
    CHECK(code_of([] { series_compose(series_of({1, 1}, 4), series_of({1, 1}, 4)); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("indexing and truncation")
{
    const auto s = series_of({1, 2, 3}, 4);
    CHECK(s[4].is_zero());
    CHECK(code_of([&] { (void)s[5]; }) == ErrorCode::IndexOutOfRange);
    CHECK(s.truncated(1) == series_of({1, 2}, 1));
    CHECK(s.valuation() == 0);
    CHECK(code_of([] { TruncatedSeries(-1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: ring axioms")
{
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = 1 + trial % 12;
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order);
        const auto one = TruncatedSeries::constant(1, order);
        const auto zero = TruncatedSeries(order);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + zero == a);
        CHECK(a + (-a) == zero);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: division round trip")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 1 + trial % 10;
        const auto a = random_series(rng, order);
        const auto u = random_unit(rng, order);
        CHECK(series_div(a, u) * u == a);
        CHECK(series_div(u * a, u) == a);
        CHECK(series_div(u, u) == TruncatedSeries::constant(1, order));
    }
}

TEST_CASE("property: exp and log round trip")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int order = 1 + trial % 10;
        auto a = random_series(rng, order);
        a = a - TruncatedSeries::constant(a[0], order);
        CHECK(series_log(series_exp(a)) == a);
        auto u = random_unit(rng, order);
        u = series_div(u, TruncatedSeries::constant(u[0], order));
        CHECK(series_exp(series_log(u)) == u);
        auto b = random_series(rng, order);
        b = b - TruncatedSeries::constant(b[0], order);
        CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    }
}

TEST_CASE("property: reversion round trip")
{
    std::mt19937_64 rng(16);
    for (int order = 1; order <= 16; ++order) {
        auto a = random_series(rng, order);
        std::vector<Rational> c;
        for (int k = 0; k <= order; ++k)
            c.push_back(k == 0 ? Rational(0) : a[k]);
        if (c[1].is_zero())
            c[1] = Rational(3);
        const TruncatedSeries f(order, c);
        const auto g = series_reversion(f);
        const auto z = TruncatedSeries::variable(order);
        CHECK(series_compose(f, g) == z);
        CHECK(series_compose(g, f) == z);
    }
}

TEST_CASE("composition against direct expansion")
{
    // (1 + w)^3 at w = x + x^2, expanded by hand
    const auto outer = series_of({1, 3, 3, 1}, 6);
    const auto inner = series_of({0, 1, 1}, 6);
    CHECK(series_compose(outer, inner) == series_of({1, 3, 6, 7, 6, 3, 1}, 6));
}

TEST_CASE("log series theta action")
{
    const auto l = LogSeries::log_variable(5);
    const auto t = log_series_theta(l);
    CHECK(t.log_degree() == 0);
    CHECK(t.part(0) == TruncatedSeries::constant(1, 5));
}
