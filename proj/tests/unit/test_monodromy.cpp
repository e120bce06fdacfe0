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
#include "mirrorkit/errors.hpp"
#include "mirrorkit/matrix.hpp"
#include "mirrorkit/monodromy.hpp"

using namespace mirrorkit;
using namespace mirrorkit::monodromy;
using linalg::Subspace;

namespace {

Vector vec(std::initializer_list<long> v)
{
    Vector out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

Matrix log_tp()
{
    const auto d = builtin_data();
    return nilpotent_log(d.T.inverse() * d.A.inverse());
}

Matrix shift_block(int size)
{
    Matrix m(size, size);
    for (int i = 0; i + 1 < size; ++i)
        m(i, i + 1) = Rational(1);
    return m;
}

} // namespace

TEST_CASE("linear algebra basics")
{
    const Matrix m{{2, 1}, {7, 4}};
    CHECK(m.determinant() == Rational(1));
    CHECK(m * m.inverse() == Matrix::identity(2));
    CHECK(m.pow(-1) == m.inverse());
    CHECK(m.pow(0) == Matrix::identity(2));
    CHECK(Matrix{{1, 2}, {2, 4}}.rank() == 1);
    CHECK_THROWS_AS(Matrix({{1, 2}, {2, 4}}).inverse(), Error);
    CHECK_THROWS_AS(m(2, 0), Error);
    CHECK(m.str() == "[[2,1],[7,4]]");

    const Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(Subspace::kernel(n).dimension() == 1);
    CHECK(Subspace::image(n).dimension() == 2);
    CHECK(intersect(Subspace::kernel(n), Subspace::image(n)).dimension() == 1);
    CHECK((Subspace::kernel(n) + Subspace::image(n)).dimension() == 2);
    CHECK(Subspace::image(n).complement().dimension() == 1);
    CHECK(linalg::primitive(vec({0, -4, 6})) == vec({0, 2, -3}));
}

TEST_CASE("property: inverse of random unimodular matrices")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        // product of elementary integer matrices
        Matrix m = Matrix::identity(4);
        for (int s = 0; s < 6; ++s) {
            Matrix e = Matrix::identity(4);
            const int i = static_cast<int>(rng() % 4), j = static_cast<int>((i + 1 + rng() % 3) % 4);
            e(i, j) = Rational(d(rng));
            m = m * e;
        }
        CHECK(m.determinant() == Rational(1));
        CHECK(m.inverse().is_integral());
        CHECK(m * m.inverse() == Matrix::identity(4));
    }
}

TEST_CASE("built-in matrices")
{
    const auto d = builtin_data();
    CHECK(d.T.row(1) == vec({0, 1, 0, 1}));
    CHECK(d.A.row(0) == vec({-9, -3, 5, 3}));
    CHECK(d.N_cdgp.row(2) == vec({2, 0, -1, 0}));
    CHECK(d.T.determinant().mpq() * d.T.determinant().mpq() == 1);
    CHECK(d.A.determinant().mpq() * d.A.determinant().mpq() == 1);
    CHECK(d.J.is_valid());
    CHECK(d.J.pairing.transpose() == Rational(-1) * d.J.pairing);
}

TEST_CASE("logarithm of the monodromy")
{
    const auto d = builtin_data();
    const Matrix tp = d.T.inverse() * d.A.inverse();
    CHECK(tp.is_integral());
    const Matrix n = nilpotent_log(tp);
    const Matrix squared{{0, 5, 0, 0}, {0, 0, 0, 0}, {0, 10, 0, 0}, {-10, 0, 5, 0}};
    const Matrix cubed{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -5, 0, 0}};
    CHECK(n.pow(2) == squared);
    CHECK(n.pow(3) == cubed);
    CHECK(n.pow(4).is_zero());
    CHECK(nilpotency_index(n) == 4);
    CHECK(nilpotent_exp(n) == tp);
    CHECK(nilpotent_log(Matrix::identity(4)).is_zero());

    const Matrix i = Matrix::identity(4);
    CHECK(((d.T - i).pow(2)).is_zero());
    CHECK(nilpotency_index(nilpotent_log(d.T)) == 2);
    CHECK(d.A.pow(5) == i);
    CHECK_THROWS_AS(nilpotent_log(d.A), Error);
    CHECK_THROWS_AS(nilpotency_index(d.A), Error);
}

TEST_CASE("action on cohomology")
{
    const Matrix nc = cohomology_action(log_tp());
    const Vector beta2 = vec({0, 0, 0, 1});
    CHECK(nc.pow(2) * beta2 == vec({10, 0, 5, 0}));
    CHECK(nc.pow(3) * beta2 == vec({0, 5, 0, 0}));
    const auto j = builtin_data().J.pairing;
    CHECK((nc.transpose() * j + j * nc).is_zero());
}

TEST_CASE("good integral basis")
{
    const auto d = builtin_data();
    const Matrix nc = cohomology_action(log_tp());
    const auto b = good_integral_basis(nc, d.J);
    CHECK(b.n == 3);
    CHECK(b.g0 == vec({0, 1, 0, 0}));
    CHECK(b.g == vec({0, 0, 0, 1}));
    CHECK(b.g1 == vec({2, 0, 1, 0}));
    CHECK(b.lambda == Rational(5));
    CHECK(b.m == Rational(1));
    CHECK(d.J.describe(b.g1) == "2*alpha_1+beta^1");
    CHECK(d.J.pair(b.g0, b.g) == Rational(1));
    CHECK(nc * b.g1 == b.g0);
    CHECK(period_functional(b.g1) == d.N_cdgp.row(2));
    CHECK(period_functional(b.g0) == d.N_cdgp.row(3));
}

TEST_CASE("image dimensions of powers of N")
{
    const Matrix nc = cohomology_action(log_tp());
    CHECK(Subspace::image(nc.pow(3)).dimension() == 1);
    CHECK(Subspace::image(nc.pow(2)).dimension() == 2);
}

TEST_CASE("projection identity on every basis vector")
{
    const auto d = builtin_data();
    const Matrix nc = cohomology_action(log_tp());
    const auto b = good_integral_basis(nc, d.J);
    for (int i = 0; i < 4; ++i) {
        Vector x(4);
        x[i] = Rational(1);
        CHECK(projection_identity(nc, d.J, b, x));
    }
    // a wrong g1 breaks it
    auto wrong = b;
    wrong.g1 = vec({1, 0, 1, 0});
    CHECK_FALSE(projection_identity(nc, d.J, wrong, vec({0, 0, 0, 1})));
}

TEST_CASE("changes of good integral basis")
{
    const auto d = builtin_data();
    const Matrix nc = cohomology_action(log_tp());
    const auto b = good_integral_basis(nc, d.J);
    for (int k = -2; k <= 2; ++k) {
        for (int l = 0; l <= 1; ++l) {
            const Rational s(l == 0 ? 1 : -1);
            const Vector g0 = linalg::scaled(b.g0, s);
            const Vector g1 = linalg::add(linalg::scaled(b.g0, Rational(k)), linalg::scaled(b.g1, s));
            const auto w = find_good_basis_witness(nc, d.J, g0, g1, 3);
            CAPTURE(k);
            CAPTURE(l);
            REQUIRE(w.has_value());
            CHECK(w->lambda == Rational(5));
            CHECK(w->m == Rational(1));
            CHECK(d.J.pair(g0, w->g) == Rational(1));
        }
    }
    // alpha_1 is not in Im N^2
    CHECK_FALSE(find_good_basis_witness(nc, d.J, b.g0, vec({1, 0, 0, 0}), 3).has_value());
}

TEST_CASE("weight filtration")
{
    const Matrix nc = cohomology_action(log_tp());
    const auto w = weight_filtration(nc, 3);
    CHECK(w.dimensions() == std::vector<int>{1, 1, 2, 2, 3, 3, 4});
    CHECK(filtration_shifts(w, nc));
    CHECK(filtration_graded_isomorphisms(w, nc));
    CHECK(w.at(-1).dimension() == 0);
    CHECK(w.at(9).dimension() == 4);
    CHECK_THROWS_AS(weight_filtration(nc, 2), Error);
}

TEST_CASE("weight filtration of a single Jordan block")
{
    for (int n = 1; n <= 4; ++n) {
        const Matrix j = shift_block(n + 1);
        const auto w = weight_filtration(j, n);
        // W_{2i} = W_{2i+1} = span(e_1 .. e_{i+1})
        for (int i = 0; i <= n; ++i) {
            std::vector<Vector> span;
            for (int r = 0; r <= i; ++r) {
                Vector e(n + 1);
                e[r] = Rational(1);
                span.push_back(e);
            }
            CHECK(w.at(2 * i) == Subspace::span(n + 1, span));
            if (2 * i + 1 <= 2 * n)
                CHECK(w.at(2 * i + 1) == w.at(2 * i));
        }
        CHECK(filtration_graded_isomorphisms(w, j));
    }
}

TEST_CASE("weight filtration of N = 0")
{
    const Matrix zero(4, 4);
    for (int n = 0; n <= 3; ++n) {
        const auto w = weight_filtration(zero, n);
        for (int k = 0; k <= 2 * n; ++k)
            CHECK(w.at(k).dimension() == (k >= n ? 4 : 0));
    }
}

TEST_CASE("full report")
{
    const auto r = quintic_mirror_report();
    CHECK(r.all_pass());
    CHECK_NOTHROW(r.require_all());
    int changes = 0;
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
        if (c.name.rfind("basis_change_", 0) == 0)
            ++changes;
    }
    CHECK(changes == 10);
    CHECK(first_difference(Matrix{{1, 2}}, Matrix{{1, 3}}) == "(1,2): got 2, expected 3");
    CHECK(first_difference(Matrix{{1, 2}}, Matrix{{1, 2}}).empty());
}
