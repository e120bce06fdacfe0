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

#include "mirrorkit/log_series.hpp"

#include <algorithm>

#include "mirrorkit/errors.hpp"

namespace mirrorkit {

namespace {

Rational binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace

LogSeries::LogSeries(TruncatedSeries holomorphic) : parts_{std::move(holomorphic)} {}

LogSeries::LogSeries(std::vector<TruncatedSeries> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw Error(ErrorCode::InvalidArgument, "log series needs at least one part");
    int order = parts_.front().order();
    for (const auto& p : parts_)
        order = std::min(order, p.order());
    for (auto& p : parts_)
        if (p.order() != order)
            p = p.truncated(order);
}

LogSeries LogSeries::log_variable(int order)
{
    return LogSeries({TruncatedSeries(order), TruncatedSeries::constant(1, order)});
}

int LogSeries::log_degree() const
{
    for (int i = part_count() - 1; i >= 0; --i)
        if (!parts_[i].is_zero())
            return i;
    return -1;
}

TruncatedSeries LogSeries::part(int i) const
{
    if (i < 0)
        throw Error(ErrorCode::IndexOutOfRange, "negative log power");
    if (i >= part_count())
        return TruncatedSeries(order());
    return parts_[i];
}

LogSeries operator+(const LogSeries& a, const LogSeries& b)
{
    const int n = std::max(a.part_count(), b.part_count());
    std::vector<TruncatedSeries> parts;
    parts.reserve(n);
    for (int i = 0; i < n; ++i)
        parts.push_back(a.part(i) + b.part(i));
    return LogSeries(std::move(parts));
}

LogSeries operator-(const LogSeries& a, const LogSeries& b)
{
    const int n = std::max(a.part_count(), b.part_count());
    std::vector<TruncatedSeries> parts;
    parts.reserve(n);
    for (int i = 0; i < n; ++i)
        parts.push_back(a.part(i) - b.part(i));
    return LogSeries(std::move(parts));
}

LogSeries operator*(const LogSeries& a, const LogSeries& b)
{
    // (L^i/i!)(L^j/j!) = C(i+j, i) L^{i+j}/(i+j)!
    const int order = std::min(a.order(), b.order());
    const int n = a.part_count() + b.part_count() - 1;
    std::vector<TruncatedSeries> parts(n, TruncatedSeries(order));
    for (int i = 0; i < a.part_count(); ++i) {
        if (a.parts_[i].is_zero())
            continue;
        for (int j = 0; j < b.part_count(); ++j) {
            if (b.parts_[j].is_zero())
                continue;
            parts[i + j] = parts[i + j] + binomial(i + j, i) * series_mul(a.parts_[i], b.parts_[j]);
        }
    }
    return LogSeries(std::move(parts));
}

LogSeries operator*(const TruncatedSeries& f, const LogSeries& a)
{
    std::vector<TruncatedSeries> parts;
    parts.reserve(a.part_count());
    for (const auto& p : a.parts_)
        parts.push_back(series_mul(f, p));
    return LogSeries(std::move(parts));
}

bool operator==(const LogSeries& a, const LogSeries& b)
{
    const int n = std::max(a.part_count(), b.part_count());
    for (int i = 0; i < n; ++i)
        if (!(a.part(i) == b.part(i)))
            return false;
    return true;
}

LogSeries log_series_theta(const LogSeries& s)
{
    std::vector<TruncatedSeries> parts;
    parts.reserve(s.part_count());
    for (int i = 0; i < s.part_count(); ++i)
        parts.push_back(series_theta(s.part(i)) + s.part(i + 1));
    return LogSeries(std::move(parts));
}

} // namespace mirrorkit
