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

#ifndef MIRRORKIT_SERIES_HPP
#define MIRRORKIT_SERIES_HPP

#include <span>
#include <vector>

#include "mirrorkit/rational.hpp"

namespace mirrorkit {

/// Formal power series c_0 + c_1 x + ... + c_K x^K with exact rational
/// coefficients. The truncation order K is part of the value: binary
/// operations truncate to the smaller order of their operands.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order);
    /// Missing trailing coefficients are zero; more than order+1 throws.
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, int order);
    /// The series x (zero when order is 0).
    static TruncatedSeries variable(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Drops coefficients above `order` (which must not exceed the current order).
    TruncatedSeries truncated(int order) const;
    /// Zero-pads to a higher order. Only meaningful when the value is an exact
    /// polynomial, e.g. the coefficients of a differential operator.
    TruncatedSeries padded(int order) const;

    bool is_zero() const;
    /// Index of the lowest nonzero coefficient, or order()+1 for the zero series.
    int valuation() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

    /// Coefficientwise equality up to the common order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with q*b = a. Throws `DivisionByNonUnit` if b has zero constant term.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Formal exponential; requires a zero constant term (`BadConstantTerm`).
TruncatedSeries series_exp(const TruncatedSeries& a);

/// Formal logarithm; requires constant term 1 (`BadConstantTerm`).
TruncatedSeries series_log(const TruncatedSeries& a);

/// Compositional inverse b with a(b(q)) = q, computed by Lagrange inversion.
/// Requires c_0 = 0 and c_1 != 0 (`NotReversible`).
TruncatedSeries series_reversion(const TruncatedSeries& a);

/// a(b(x)); b must have zero constant term. Truncated to min of the orders.
TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// d/dx, dropping the top order by one.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// x d/dx, order preserved.
TruncatedSeries series_theta(const TruncatedSeries& a);

/// Integer power a^n, n >= 0.
TruncatedSeries series_pow(const TruncatedSeries& a, int n);

/// a(x)/x for a with zero constant term; the order drops by one.
TruncatedSeries series_divide_by_variable(const TruncatedSeries& a);

/// x*a(x) at the same order (the top coefficient of a is discarded).
TruncatedSeries series_multiply_by_variable(const TruncatedSeries& a);

/// True when every coefficient has denominator 1.
bool is_integral(const TruncatedSeries& a);

} // namespace mirrorkit

#endif // MIRRORKIT_SERIES_HPP
