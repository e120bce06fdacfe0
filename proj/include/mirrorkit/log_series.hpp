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

#ifndef MIRRORKIT_LOG_SERIES_HPP
#define MIRRORKIT_LOG_SERIES_HPP

#include <vector>

#include "mirrorkit/series.hpp"

namespace mirrorkit {

/// Finite sum  sum_i S_i(z) (log z)^i / i!  with truncated-series parts.
/// The divided-power normalization makes theta act as a shift on the parts.
class LogSeries {
public:
    explicit LogSeries(TruncatedSeries holomorphic);
    /// parts[i] multiplies (log z)^i / i!. All parts are truncated to the
    /// smallest order among them. At least one part is required.
    explicit LogSeries(std::vector<TruncatedSeries> parts);

    /// The bare log z at the given order.
    static LogSeries log_variable(int order);

    int order() const { return parts_.front().order(); }
    /// Highest i with a nonzero part, or -1 for the zero series.
    int log_degree() const;
    /// Part i; zero series when i is beyond the stored parts.
    TruncatedSeries part(int i) const;
    int part_count() const { return static_cast<int>(parts_.size()); }

    bool is_zero() const { return log_degree() < 0; }

    friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    /// Multiplies every part by a holomorphic series.
    friend LogSeries operator*(const TruncatedSeries& f, const LogSeries& a);

    /// Equal parts up to the common order; missing parts compare as zero.
    friend bool operator==(const LogSeries& a, const LogSeries& b);

private:
    std::vector<TruncatedSeries> parts_;
};

/// theta = z d/dz:  theta(S (log z)^i/i!) = (theta S)(log z)^i/i! + S (log z)^{i-1}/(i-1)!.
LogSeries log_series_theta(const LogSeries& s);

} // namespace mirrorkit

#endif // MIRRORKIT_LOG_SERIES_HPP
