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

#include "mirrorkit/yukawa.hpp"

#include <algorithm>
#include <vector>

#include "mirrorkit/errors.hpp"
#include "mirrorkit/mirror_map.hpp"

namespace mirrorkit::yukawa {

TruncatedSeries coupling_ode_from_pf(const pf::ODEOperator& op, int order, const Rational& normalization)
{
    if (op.degree() != 4)
        throw Error(ErrorCode::InvalidArgument, "coupling equation is implemented for degree-4 operators");
    const TruncatedSeries a3 = op.coefficient(3, order);
    const TruncatedSeries a4 = op.coefficient(4, order);
    const TruncatedSeries rhs = Rational(-1, 2) * series_div(a3, a4);
    if (!rhs[0].is_zero())
        throw Error(ErrorCode::InvalidArgument, "a_3(0) must vanish for a holomorphic coupling");
    // log W = log W(0) + sum_n rhs_n z^n / n
    std::vector<Rational> log_w(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n)
        log_w[n] = rhs[n] / Rational(n);
    return normalization * series_exp(TruncatedSeries(order, std::move(log_w)));
}

TruncatedSeries coupling_from_periods(std::span<const LogSeries> periods, const Rational& normalization)
{
    if (periods.size() != 4)
        throw Error(ErrorCode::InvalidArgument, "coupling from periods needs four periods");
    int order = periods.front().order();
    for (const auto& p : periods)
        order = std::min(order, p.order());

    LogSeries pairing{TruncatedSeries(order)};
    for (std::size_t a = 0; a < 4; ++a) {
        LogSeries third = periods[3 - a];
        for (int i = 0; i < 3; ++i)
            third = log_series_theta(third);
        const LogSeries term = periods[a] * third;
        pairing = (a % 2 == 0) ? pairing + term : pairing - term;
    }
    if (pairing.log_degree() > 0)
        throw Error(ErrorCode::CheckFailed, "log terms survive in the period pairing");
    return normalization * pairing.part(0);
}

TruncatedSeries coupling_from_periods(const pf::FrobeniusBasis& basis, const Rational& normalization)
{
    if (basis.size() != 4)
        throw Error(ErrorCode::InvalidArgument, "coupling from periods needs a rank-4 Frobenius basis");
    std::vector<LogSeries> periods;
    for (const auto& s : basis.solutions())
        periods.push_back(s.value);
    return coupling_from_periods(periods, normalization);
}

CouplingSeries normalized_yukawa_from_basis(const pf::FrobeniusBasis& basis, int order, bool strict)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
    const int work = std::max(order, 2) + 1;
    if (basis.order() < work)
        throw Error(ErrorCode::InvalidArgument, "Frobenius basis of order " + std::to_string(basis.order()) +
                                                    " is too short for a coupling of order " +
                                                    std::to_string(order));
    const auto trimmed = basis.truncated(work);
    const auto map = mirror::canonical_coordinate_series(trimmed);
    const TruncatedSeries& z = map.z_of_q;

    const TruncatedSeries w = coupling_ode_from_pf(pf::pf_operator(), work);
    const TruncatedSeries w_of_q = series_compose(w, z);
    const TruncatedSeries y0_of_q = series_compose(trimmed.holomorphic(), z);

    // (q/z) dz/dq, both factors at order work-1
    const TruncatedSeries jacobian = series_div(series_derivative(z), series_divide_by_variable(z));
    const TruncatedSeries kappa =
        series_mul(series_div(w_of_q, series_mul(y0_of_q, y0_of_q)), series_pow(jacobian, 3));

    CouplingSeries out{kappa.truncated(order)};
    if (strict) {
        for (int k = 0; k <= order; ++k)
            if (!out[k].is_integer())
                throw Error(ErrorCode::NonIntegral,
                            "Yukawa coefficient a_" + std::to_string(k) + " = " + out[k].str() + " is not an integer");
    }
    return out;
}

CouplingSeries normalized_yukawa_q_expansion(int order, bool strict)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
    return normalized_yukawa_from_basis(pf::frobenius_basis(std::max(order, 2) + 1), order, strict);
}

bool gauge_transform_check(const TruncatedSeries& gauge, int order)
{
    if (gauge[0].is_zero())
        throw Error(ErrorCode::DivisionByNonUnit, "gauge factor must be a unit series");
    const int n = std::min(order, gauge.order());
    const auto basis = pf::frobenius_basis(std::max(n, 1)).truncated(n);
    const TruncatedSeries f = gauge.truncated(n);

    std::vector<LogSeries> original;
    std::vector<LogSeries> rescaled;
    for (const auto& s : basis.solutions()) {
        original.push_back(s.value);
        rescaled.push_back(f * s.value);
    }
    const TruncatedSeries before = coupling_from_periods(original);
    const TruncatedSeries after = coupling_from_periods(rescaled);
    return after == series_mul(series_mul(f, f), before);
}

} // namespace mirrorkit::yukawa
