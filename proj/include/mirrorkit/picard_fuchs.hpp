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

#ifndef MIRRORKIT_PICARD_FUCHS_HPP
#define MIRRORKIT_PICARD_FUCHS_HPP

#include <string>
#include <vector>

#include "mirrorkit/log_series.hpp"
#include "mirrorkit/series.hpp"

namespace mirrorkit::pf {

/// Linear differential operator  L = sum_k a_k(z) theta^k,  theta = z d/dz,
/// whose coefficients a_k are exact polynomials in z (stored as series whose
/// order is the polynomial degree).
struct ODEOperator {
    std::vector<TruncatedSeries> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// a_k zero-padded to the requested order.
    TruncatedSeries coefficient(int k, int order) const;
    /// Largest z-degree among the coefficients.
    int polynomial_degree() const;
    /// Coefficients of the indicial polynomial at z = 0, lowest power first.
    std::vector<Rational> indicial_polynomial() const;
    /// Stable textual form, used as the cache key of Frobenius bases.
    std::string canonical_text() const;
};

/// theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4), expanded, in the
/// coordinate z = (5 psi)^{-5} of the quintic-mirror family.
ODEOperator pf_operator();

/// The first-order operator theta.
ODEOperator theta_operator();

/// L applied formally to a log series (log degree never increases).
LogSeries apply_operator(const ODEOperator& op, const LogSeries& s);

/// y0(z) = sum_{n<=K} (5n)!/(n!)^5 z^n, from the closed form.
TruncatedSeries holomorphic_period(int order);

struct FrobeniusSolution {
    int depth = 0;
    /// Log degree exactly `depth`; part `depth` equals y0.
    LogSeries value;
    /// y0(0) = 1 and every lower part vanishes at z = 0.
    bool normalized = false;
};

/// Frobenius basis at a point of maximally unipotent monodromy.
///
/// With y(z, eps) = sum_n c_n(eps) z^{n+eps} and c_0 = 1, the operator gives
/// L y = (indicial) eps^D z^eps, so the eps^d coefficients are solutions for
/// d < D. Writing c_n(eps) = sum_k S_k[n] eps^k, the depth-d solution is
///     y_d = sum_{i<=d} S_{d-i}(z) (log z)^i / i!.
/// The basis stores the component series S_0 .. S_{D-1}.
class FrobeniusBasis {
public:
    /// Validates c_0 normalization: S_0(0) = 1 and S_k(0) = 0 for k >= 1.
    static FrobeniusBasis from_components(std::vector<TruncatedSeries> components);

    int order() const { return components_.front().order(); }
    int size() const { return static_cast<int>(components_.size()); }
    const TruncatedSeries& component(int k) const;
    FrobeniusSolution solution(int depth) const;
    std::vector<FrobeniusSolution> solutions() const;
    FrobeniusBasis truncated(int order) const;

    /// y0.
    const TruncatedSeries& holomorphic() const { return components_.front(); }
    /// The holomorphic correction in y1 = y0 log z + y1~.
    const TruncatedSeries& log_correction() const { return component(1); }

private:
    explicit FrobeniusBasis(std::vector<TruncatedSeries> components);
    std::vector<TruncatedSeries> components_;
};

/// Frobenius recursion for an operator with indicial polynomial a_D(0) rho^D.
/// Throws `InvalidArgument` when the indicial polynomial has another form and
/// `RecurrenceBreakdown` if the leading coefficient vanishes at some n >= 1.
FrobeniusBasis frobenius_basis(const ODEOperator& op, int order);

/// Frobenius basis of `pf_operator()`.
FrobeniusBasis frobenius_basis(int order);

/// True when L(y_d) vanishes identically through the truncation order for
/// every solution in the basis.
bool annihilates(const ODEOperator& op, const FrobeniusBasis& basis);

} // namespace mirrorkit::pf

#endif // MIRRORKIT_PICARD_FUCHS_HPP
