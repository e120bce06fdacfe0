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

#include "mirrorkit/picard_fuchs.hpp"

#include <algorithm>
#include <sstream>

#include "mirrorkit/errors.hpp"

namespace mirrorkit::pf {

namespace {

// Coefficients of a polynomial in theta, lowest power first.
using ThetaPolynomial = std::vector<Rational>;

ThetaPolynomial multiply(const ThetaPolynomial& a, const ThetaPolynomial& b)
{
    ThetaPolynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Taylor expansion of p(n + eps) to order `order` in eps.
TruncatedSeries shifted_polynomial(const std::vector<Rational>& p, const Rational& n, int order)
{
    const TruncatedSeries argument =
        order == 0 ? TruncatedSeries::constant(n, 0) : TruncatedSeries(order, {n, Rational(1)});
    TruncatedSeries acc(order);
    for (std::size_t k = p.size(); k-- > 0;)
        acc = series_mul(acc, argument) + TruncatedSeries::constant(p[k], order);
    return acc;
}

} // namespace

TruncatedSeries ODEOperator::coefficient(int k, int order) const
{
    if (k < 0 || k > degree())
        throw Error(ErrorCode::IndexOutOfRange, "operator has no theta^" + std::to_string(k) + " term");
    return coeffs[k].padded(order);
}

int ODEOperator::polynomial_degree() const
{
    int d = 0;
    for (const auto& c : coeffs)
        d = std::max(d, c.order());
    return d;
}

std::vector<Rational> ODEOperator::indicial_polynomial() const
{
    std::vector<Rational> p;
    p.reserve(coeffs.size());
    for (const auto& c : coeffs)
        p.push_back(c[0]);
    return p;
}

std::string ODEOperator::canonical_text() const
{
    std::ostringstream os;
    for (int k = 0; k <= degree(); ++k) {
        os << "theta^" << k << ':';
        for (int m = 0; m <= coeffs[k].order(); ++m)
            os << (m ? "," : "") << coeffs[k][m];
        os << ';';
    }
    return os.str();
}

ODEOperator pf_operator()
{
    ThetaPolynomial product{Rational(1)};
    for (int j = 1; j <= 4; ++j)
        product = multiply(product, ThetaPolynomial{Rational(j), Rational(5)});

    // theta^4 - 5 z * product; every a_k is linear in z.
    ODEOperator op;
    for (int k = 0; k <= 4; ++k) {
        const Rational constant = k == 4 ? Rational(1) : Rational(0);
        op.coeffs.emplace_back(1, std::vector<Rational>{constant, Rational(-5) * product[k]});
    }
    return op;
}

ODEOperator theta_operator()
{
    ODEOperator op;
    op.coeffs.emplace_back(0, std::vector<Rational>{Rational(0)});
    op.coeffs.emplace_back(0, std::vector<Rational>{Rational(1)});
    return op;
}

LogSeries apply_operator(const ODEOperator& op, const LogSeries& s)
{
    const int order = s.order();
    LogSeries power = s;
    LogSeries acc = op.coefficient(0, order) * s;
    for (int k = 1; k <= op.degree(); ++k) {
        power = log_series_theta(power);
        acc = acc + op.coefficient(k, order) * power;
    }
    return acc;
}

TruncatedSeries holomorphic_period(int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Integer num;
        Integer den;
        mpz_fac_ui(num.get_mpz_t(), 5ul * static_cast<unsigned long>(n));
        mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n));
        Integer den5;
        mpz_pow_ui(den5.get_mpz_t(), den.get_mpz_t(), 5);
        c.emplace_back(num, den5);
    }
    return TruncatedSeries(order, std::move(c));
}

FrobeniusBasis::FrobeniusBasis(std::vector<TruncatedSeries> components) : components_(std::move(components)) {}

FrobeniusBasis FrobeniusBasis::from_components(std::vector<TruncatedSeries> components)
{
    if (components.empty())
        throw Error(ErrorCode::InvalidArgument, "Frobenius basis needs at least one component");
    int order = components.front().order();
    for (const auto& c : components)
        order = std::min(order, c.order());
    for (auto& c : components)
        c = c.truncated(order);
    if (components[0][0] != Rational(1))
        throw Error(ErrorCode::InvalidArgument, "holomorphic period must have constant term 1");
    for (std::size_t k = 1; k < components.size(); ++k)
        if (!components[k][0].is_zero())
            throw Error(ErrorCode::InvalidArgument,
                        "component " + std::to_string(k) + " must vanish at z = 0");
    return FrobeniusBasis(std::move(components));
}

const TruncatedSeries& FrobeniusBasis::component(int k) const
{
    if (k < 0 || k >= size())
        throw Error(ErrorCode::IndexOutOfRange, "no Frobenius component " + std::to_string(k));
    return components_[k];
}

FrobeniusSolution FrobeniusBasis::solution(int depth) const
{
    if (depth < 0 || depth >= size())
        throw Error(ErrorCode::IndexOutOfRange, "no Frobenius solution of depth " + std::to_string(depth));
    std::vector<TruncatedSeries> parts;
    parts.reserve(depth + 1);
    for (int i = 0; i <= depth; ++i)
        parts.push_back(components_[depth - i]);
    bool normalized = components_[0][0] == Rational(1);
    for (int i = 0; i < depth; ++i)
        normalized = normalized && parts[i][0].is_zero();
    return {depth, LogSeries(std::move(parts)), normalized};
}

std::vector<FrobeniusSolution> FrobeniusBasis::solutions() const
{
    std::vector<FrobeniusSolution> out;
    out.reserve(size());
    for (int d = 0; d < size(); ++d)
        out.push_back(solution(d));
    return out;
}

FrobeniusBasis FrobeniusBasis::truncated(int order) const
{
    std::vector<TruncatedSeries> parts;
    parts.reserve(components_.size());
    for (const auto& c : components_)
        parts.push_back(c.truncated(order));
    return FrobeniusBasis(std::move(parts));
}

FrobeniusBasis frobenius_basis(const ODEOperator& op, int order)
{
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "Frobenius basis needs order >= 1");
    const int depth = op.degree();
    if (depth < 1)
        throw Error(ErrorCode::InvalidArgument, "operator must have degree >= 1");
    const auto indicial = op.indicial_polynomial();
    for (int k = 0; k < depth; ++k)
        if (!indicial[k].is_zero())
            throw Error(ErrorCode::InvalidArgument,
                        "indicial polynomial is not a pure power of rho; z = 0 is not maximally unipotent");
    if (indicial[depth].is_zero())
        throw Error(ErrorCode::InvalidArgument, "leading coefficient vanishes at z = 0");

    // P_m(rho) = sum_k [z^m] a_k rho^k
    const int zdeg = op.polynomial_degree();
    std::vector<std::vector<Rational>> shift_poly(zdeg + 1, std::vector<Rational>(depth + 1));
    for (int k = 0; k <= depth; ++k)
        for (int m = 0; m <= op.coeffs[k].order(); ++m)
            shift_poly[m][k] = op.coeffs[k][m];

    const int eps_order = depth - 1;
    std::vector<TruncatedSeries> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    c.push_back(TruncatedSeries::constant(1, eps_order));
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries rhs(eps_order);
        for (int m = 1; m <= std::min(n, zdeg); ++m)
            rhs = rhs - series_mul(shifted_polynomial(shift_poly[m], Rational(n - m), eps_order), c[n - m]);
        const TruncatedSeries lead = shifted_polynomial(shift_poly[0], Rational(n), eps_order);
        if (lead[0].is_zero())
            throw Error(ErrorCode::RecurrenceBreakdown,
                        "indicial polynomial vanishes at n = " + std::to_string(n));
        c.push_back(series_div(rhs, lead));
    }

    std::vector<TruncatedSeries> components;
    components.reserve(depth);
    for (int k = 0; k < depth; ++k) {
        std::vector<Rational> coeffs;
        coeffs.reserve(c.size());
        for (const auto& cn : c)
            coeffs.push_back(cn[k]);
        components.emplace_back(order, std::move(coeffs));
    }
    return FrobeniusBasis::from_components(std::move(components));
}

FrobeniusBasis frobenius_basis(int order)
{
    return frobenius_basis(pf_operator(), order);
}

bool annihilates(const ODEOperator& op, const FrobeniusBasis& basis)
{
    for (const auto& sol : basis.solutions())
        if (!apply_operator(op, sol.value).is_zero())
            return false;
    return true;
}

} // namespace mirrorkit::pf
