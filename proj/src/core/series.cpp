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

#include "mirrorkit/series.hpp"

#include <algorithm>
#include <string>

#include "mirrorkit/errors.hpp"

namespace mirrorkit {

namespace {

void require_order(int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "series order must be >= 0, got " + std::to_string(order));
}

} // namespace

TruncatedSeries::TruncatedSeries(int order)
{
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational{});
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    require_order(order);
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1)
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(coeffs_.size()) + " coefficients exceed order " + std::to_string(order));
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(int order)
{
    TruncatedSeries s(order);
    if (order >= 1)
        s.coeffs_[1] = 1;
    return s;
}

const Rational& TruncatedSeries::operator[](int k) const
{
    if (k < 0 || k > order())
        throw Error(ErrorCode::IndexOutOfRange,
                    "coefficient " + std::to_string(k) + " outside order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    if (order > this->order())
        throw Error(ErrorCode::InvalidArgument, "cannot truncate order " + std::to_string(this->order()) +
                                                    " up to " + std::to_string(order));
    return TruncatedSeries(order, {coeffs_.begin(), coeffs_.begin() + order + 1});
}

TruncatedSeries TruncatedSeries::padded(int order) const
{
    if (order < this->order())
        return truncated(order);
    return TruncatedSeries(order, coeffs_);
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

int TruncatedSeries::valuation() const
{
    for (int k = 0; k <= order(); ++k)
        if (!coeffs_[static_cast<std::size_t>(k)].is_zero())
            return k;
    return order() + 1;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k)
        r.coeffs_[k] = -coeffs_[k];
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return series_mul(a, b);
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a)
{
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.coeffs_[k] = c * a.coeffs_[k];
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (b[0].is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "divisor has zero constant term");
    const int n = std::min(a.order(), b.order());
    const Rational inv0 = Rational(1) / b[0];
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j)
            if (!b[j].is_zero())
                acc -= b[j] * q[k - j];
        q[k] = acc * inv0;
    }
    return TruncatedSeries(n, std::move(q));
}

TruncatedSeries series_exp(const TruncatedSeries& a)
{
    if (!a[0].is_zero())
        throw Error(ErrorCode::BadConstantTerm, "exp needs zero constant term, got " + a[0].str());
    // e' = a' e, i.e. k e_k = sum_j j a_j e_{k-j}.
    const int n = a.order();
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j)
            if (!a[j].is_zero())
                acc += Rational(j) * a[j] * e[k - j];
        e[k] = acc / Rational(k);
    }
    return TruncatedSeries(n, std::move(e));
}

TruncatedSeries series_log(const TruncatedSeries& a)
{
    if (a[0] != Rational(1))
        throw Error(ErrorCode::BadConstantTerm, "log needs constant term 1, got " + a[0].str());
    // log(a)' = a'/a.
    const TruncatedSeries ratio = series_div(series_derivative(a), a.truncated(std::max(a.order() - 1, 0)));
    std::vector<Rational> l(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        l[k] = ratio[k - 1] / Rational(k);
    return TruncatedSeries(a.order(), std::move(l));
}

TruncatedSeries series_reversion(const TruncatedSeries& a)
{
    const int n = a.order();
    if (n < 1)
        throw Error(ErrorCode::NotReversible, "reversion needs order >= 1");
    if (!a[0].is_zero())
        throw Error(ErrorCode::NotReversible, "reversion needs zero constant term, got " + a[0].str());
    if (a[1].is_zero())
        throw Error(ErrorCode::NotReversible, "reversion needs nonzero linear term");

    // Lagrange inversion: b_k = (1/k) [x^{k-1}] (x / a(x))^k.
    const TruncatedSeries phi = series_div(TruncatedSeries::constant(1, n - 1), series_divide_by_variable(a));
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    TruncatedSeries power = TruncatedSeries::constant(1, n - 1);
    for (int k = 1; k <= n; ++k) {
        power = series_mul(power, phi);
        b[k] = power[k - 1] / Rational(k);
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!b[0].is_zero())
        throw Error(ErrorCode::InvalidArgument, "inner series of a composition needs zero constant term");
    const int n = std::min(a.order(), b.order());
    TruncatedSeries acc = TruncatedSeries::constant(a[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = series_mul(acc, b.truncated(n));
        acc = acc + TruncatedSeries::constant(a[k], n);
    }
    return acc;
}

TruncatedSeries series_derivative(const TruncatedSeries& a)
{
    const int n = std::max(a.order() - 1, 0);
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= a.order(); ++k)
        d[k - 1] = Rational(k) * a[k];
    return TruncatedSeries(n, std::move(d));
}

TruncatedSeries series_theta(const TruncatedSeries& a)
{
    std::vector<Rational> d(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        d[k] = Rational(k) * a[k];
    return TruncatedSeries(a.order(), std::move(d));
}

TruncatedSeries series_pow(const TruncatedSeries& a, int n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative series power");
    TruncatedSeries result = TruncatedSeries::constant(1, a.order());
    TruncatedSeries base = a;
    while (n > 0) {
        if (n & 1)
            result = series_mul(result, base);
        n >>= 1;
        if (n > 0)
            base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries series_divide_by_variable(const TruncatedSeries& a)
{
    if (!a[0].is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by the variable needs zero constant term");
    if (a.order() == 0)
        throw Error(ErrorCode::InvalidArgument, "division by the variable needs order >= 1");
    return TruncatedSeries(a.order() - 1, {a.coefficients().begin() + 1, a.coefficients().end()});
}

TruncatedSeries series_multiply_by_variable(const TruncatedSeries& a)
{
    std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        c[k] = a[k - 1];
    return TruncatedSeries(a.order(), std::move(c));
}

bool is_integral(const TruncatedSeries& a)
{
    return std::all_of(a.coefficients().begin(), a.coefficients().end(),
                       [](const Rational& c) { return c.is_integer(); });
}

} // namespace mirrorkit
