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

#ifndef MIRRORKIT_INSTANTON_HPP
#define MIRRORKIT_INSTANTON_HPP

#include <vector>

#include "mirrorkit/yukawa.hpp"

namespace mirrorkit::instanton {

struct InstantonEntry {
    int degree = 0;
    /// n_d; exact, may be fractional only when integrality failed.
    Rational count;
    /// a_d - sum_{k | d, k < d} n_k k^3, the quantity that must be divisible by d^3.
    Rational numerator;
    bool integral = false;
    bool positive = false;
};

struct InstantonTable {
    std::vector<InstantonEntry> entries; // degrees 1..K in order

    int max_degree() const { return static_cast<int>(entries.size()); }
    const InstantonEntry& at(int degree) const;
};

/// Solves a_d = sum_{k | d} n_k k^3 for d = 1..K by forward substitution.
/// Requires a_0 = 5 and K >= 1. With `strict`, a fractional n_d throws
/// `NonIntegral`; otherwise it is recorded with integral = false.
InstantonTable extract_instanton_numbers(const yukawa::CouplingSeries& coupling, bool strict = true);

/// 5 + sum_k n_k k^3 q^k/(1 - q^k), expanded to order K. The table must
/// cover every degree up to K.
yukawa::CouplingSeries predict_coupling_from_instantons(const InstantonTable& table, int order);

struct DivisibilityCheck {
    int degree = 0;
    Rational numerator;
    Integer modulus; // d^3
    Rational remainder;
    bool divisible = false;
};

struct DivisibilityReport {
    std::vector<DivisibilityCheck> checks;
    bool all_pass() const;
};

/// For every degree, checks that the numerator of the forward-substitution
/// step is an integer divisible by d^3. Always completes. Requires K >= 3.
DivisibilityReport divisibility_audit(const yukawa::CouplingSeries& coupling, const InstantonTable& table);

} // namespace mirrorkit::instanton

#endif // MIRRORKIT_INSTANTON_HPP
