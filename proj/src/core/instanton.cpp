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

#include "mirrorkit/instanton.hpp"

#include "mirrorkit/errors.hpp"

namespace mirrorkit::instanton {

namespace {

Rational cube(int k)
{
    return Rational(static_cast<long>(k) * k * k);
}

} // namespace

const InstantonEntry& InstantonTable::at(int degree) const
{
    if (degree < 1 || degree > max_degree())
        throw Error(ErrorCode::IndexOutOfRange, "no instanton number of degree " + std::to_string(degree));
    return entries[degree - 1];
}

InstantonTable extract_instanton_numbers(const yukawa::CouplingSeries& coupling, bool strict)
{
    if (coupling.order() < 1)
        throw Error(ErrorCode::InvalidArgument, "instanton extraction needs order >= 1");
    if (coupling[0] != yukawa::kTopologicalNormalization)
        throw Error(ErrorCode::InvalidArgument, "coupling constant term must be 5, got " + coupling[0].str());

    InstantonTable table;
    for (int d = 1; d <= coupling.order(); ++d) {
        Rational numerator = coupling[d];
        for (int k = 1; k < d; ++k)
            if (d % k == 0)
                numerator -= table.entries[k - 1].count * cube(k);
        InstantonEntry entry;
        entry.degree = d;
        entry.numerator = numerator;
        entry.count = numerator / cube(d);
        entry.integral = entry.count.is_integer();
        entry.positive = entry.count.sign() > 0;
        if (strict && !entry.integral)
            throw Error(ErrorCode::NonIntegral,
                        "NonIntegralInstanton: n_" + std::to_string(d) + " = " + entry.count.str());
        table.entries.push_back(std::move(entry));
    }
    return table;
}

yukawa::CouplingSeries predict_coupling_from_instantons(const InstantonTable& table, int order)
{
    if (order < 0)
        throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
    if (table.max_degree() < order)
        throw Error(ErrorCode::InvalidArgument, "table covers degrees up to " + std::to_string(table.max_degree()) +
                                                    ", need " + std::to_string(order));
    std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
    a[0] = yukawa::kTopologicalNormalization;
    // n_k k^3 q^k / (1 - q^k) = n_k k^3 (q^k + q^{2k} + ...)
    for (int k = 1; k <= order; ++k) {
        const Rational weight = table.at(k).count * cube(k);
        for (int m = k; m <= order; m += k)
            a[m] += weight;
    }
    return {TruncatedSeries(order, std::move(a))};
}

bool DivisibilityReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.divisible)
            return false;
    return true;
}

DivisibilityReport divisibility_audit(const yukawa::CouplingSeries& coupling, const InstantonTable& table)
{
    if (coupling.order() < 3)
        throw Error(ErrorCode::InvalidArgument, "divisibility audit needs order >= 3");
    DivisibilityReport report;
    const int top = std::min(coupling.order(), table.max_degree());
    for (int d = 1; d <= top; ++d) {
        Rational numerator = coupling[d];
        for (int k = 1; k < d; ++k)
            if (d % k == 0)
                numerator -= table.at(k).count * cube(k);
        DivisibilityCheck check;
        check.degree = d;
        check.numerator = numerator;
        check.modulus = Integer(d) * d * d;
        if (numerator.is_integer()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), numerator.numerator().get_mpz_t(), check.modulus.get_mpz_t());
            check.remainder = Rational(r);
            check.divisible = r == 0;
        } else {
            check.remainder = numerator;
            check.divisible = false;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace mirrorkit::instanton
