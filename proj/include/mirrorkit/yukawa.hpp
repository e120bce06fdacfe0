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

#ifndef MIRRORKIT_YUKAWA_HPP
#define MIRRORKIT_YUKAWA_HPP

#include <span>

#include "mirrorkit/picard_fuchs.hpp"

namespace mirrorkit::yukawa {

/// Large-radius limit of the coupling: the triple intersection H^3 = 5.
inline const Rational kTopologicalNormalization{5};

/// kappa_ttt = a_0 + a_1 q + ... + a_K q^K.
struct CouplingSeries {
    TruncatedSeries coefficients;

    int order() const { return coefficients.order(); }
    const Rational& operator[](int k) const { return coefficients[k]; }
};

/// Unnormalized coupling W(z) in the theta frame, from the first-order
/// equation theta log W = -(1/2) a_3/a_4 with W(0) = `normalization`.
/// Requires a degree-4 operator with a_3(0) = 0 and a_4(0) != 0.
TruncatedSeries coupling_ode_from_pf(const pf::ODEOperator& op, int order,
                                     const Rational& normalization = kTopologicalNormalization);

/// Same coupling from the periods themselves:
///     W = normalization * sum_a (-1)^a Pi_a theta^3 Pi_{3-a}
/// for a period vector Pi (four log series, Frobenius ordering). The log
/// terms must cancel; a surviving log term throws `CheckFailed`.
TruncatedSeries coupling_from_periods(std::span<const LogSeries> periods,
                                      const Rational& normalization = kTopologicalNormalization);
TruncatedSeries coupling_from_periods(const pf::FrobeniusBasis& basis,
                                      const Rational& normalization = kTopologicalNormalization);

/// kappa_ttt(q) = W(z(q)) y0(z(q))^{-2} ((q/z(q)) dz/dq)^3, truncated at K.
/// The basis must have order >= K+1. With `strict`, a non-integral
/// coefficient throws `NonIntegral`.
CouplingSeries normalized_yukawa_from_basis(const pf::FrobeniusBasis& basis, int order, bool strict = true);
CouplingSeries normalized_yukawa_q_expansion(int order, bool strict = true);

/// Rescales the holomorphic section by the unit f (every period multiplied by
/// f) and checks that the period-route coupling becomes f^2 times the
/// original, coefficient by coefficient.
bool gauge_transform_check(const TruncatedSeries& gauge, int order);

} // namespace mirrorkit::yukawa

#endif // MIRRORKIT_YUKAWA_HPP
