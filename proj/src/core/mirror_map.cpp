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

#include "mirrorkit/mirror_map.hpp"

#include "mirrorkit/errors.hpp"

namespace mirrorkit::mirror {

MirrorMap canonical_coordinate_series(const pf::FrobeniusBasis& basis)
{
    if (basis.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "mirror map needs the depth-1 Frobenius solution");
    const TruncatedSeries exponent = series_div(basis.log_correction(), basis.holomorphic());
    const TruncatedSeries q = series_multiply_by_variable(series_exp(exponent));
    return {q, series_reversion(q)};
}

MirrorMap canonical_coordinate_series(int order)
{
    if (order < 2)
        throw Error(ErrorCode::InvalidArgument, "mirror map needs order >= 2");
    return canonical_coordinate_series(pf::frobenius_basis(order));
}

LogSeries canonical_parameter(const LogSeries& y0, const LogSeries& y1)
{
    if (y0.log_degree() != 0)
        throw Error(ErrorCode::InvalidArgument, "y0 must be holomorphic");
    // Division by a holomorphic unit acts part by part.
    std::vector<TruncatedSeries> parts;
    for (int i = 0; i < y1.part_count(); ++i)
        parts.push_back(series_div(y1.part(i), y0.part(0)));
    return LogSeries(std::move(parts));
}

bool monodromy_shift_check(const LogSeries& y0, const LogSeries& y1)
{
    const LogSeries t = canonical_parameter(y0, y1);
    if (t.log_degree() != 1)
        return false;
    return t.part(1) == TruncatedSeries::constant(1, t.order());
}

bool monodromy_shift_check(int order)
{
    const auto basis = pf::frobenius_basis(order);
    return monodromy_shift_check(basis.solution(0).value, basis.solution(1).value);
}

} // namespace mirrorkit::mirror
