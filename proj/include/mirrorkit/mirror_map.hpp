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

#ifndef MIRRORKIT_MIRROR_MAP_HPP
#define MIRRORKIT_MIRROR_MAP_HPP

#include "mirrorkit/picard_fuchs.hpp"

namespace mirrorkit::mirror {

/// Canonical coordinate q = exp(2 pi i t) as a series in z, and its inverse.
/// With y1 = y0 log z + y1~ the canonical parameter satisfies
/// 2 pi i t = log z + y1~/y0, hence q = z exp(y1~/y0).
struct MirrorMap {
    TruncatedSeries q_of_z;
    TruncatedSeries z_of_q;
};

MirrorMap canonical_coordinate_series(const pf::FrobeniusBasis& basis);
/// Computes the Frobenius basis of the quintic-mirror operator first. K >= 2.
MirrorMap canonical_coordinate_series(int order);

/// y1/y0 as a log series: part 1 is the coefficient of log z in 2 pi i t.
LogSeries canonical_parameter(const LogSeries& y0, const LogSeries& y1);

/// The shift log z -> log z + 2 pi i adds exactly 1 to t iff the log z part
/// of y1/y0 is the constant series 1 and nothing of higher log degree
/// survives. Takes the two solutions explicitly so corrupted inputs can be
/// checked too.
bool monodromy_shift_check(const LogSeries& y0, const LogSeries& y1);
bool monodromy_shift_check(int order);

} // namespace mirrorkit::mirror

#endif // MIRRORKIT_MIRROR_MAP_HPP
