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

#ifndef MIRRORKIT_MONODROMY_HPP
#define MIRRORKIT_MONODROMY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mirrorkit/matrix.hpp"

namespace mirrorkit::monodromy {

using linalg::Matrix;
using linalg::Subspace;
using linalg::Vector;

/// Pairing <u, v> = u^T J v on a rank-2k lattice with basis
/// (alpha_1..alpha_k, beta^1..beta^k).
struct SymplecticStructure {
    std::vector<std::string> labels;
    Matrix pairing;

    Rational pair(const Vector& u, const Vector& v) const;
    bool is_valid() const; // skew-symmetric, integral, unimodular
    /// "2*alpha_1+beta^1" style rendering of an integer vector.
    std::string describe(const Vector& v) const;
};

SymplecticStructure standard_symplectic(int k);

struct BuiltinData {
    Matrix T;      // transport around lambda = 1, acting on (G_1, G_2, z^1, z^2)
    Matrix A;      // psi -> alpha psi
    SymplecticStructure J;
    Matrix N_cdgp; // (F_1, F_2, w^1, w^2) = N_cdgp (G_1, G_2, z^1, z^2)
};

BuiltinData builtin_data();

/// Smallest k >= 0 with N^k = 0. Throws `NotNilpotent` if N^dim != 0.
int nilpotency_index(const Matrix& n);

/// Finite logarithm sum_{j>=1} (-1)^{j+1} (M - I)^j / j. Throws
/// `NotUnipotent` when (M - I)^{dim} != 0.
Matrix nilpotent_log(const Matrix& m);

/// Finite exponential of a nilpotent matrix.
Matrix nilpotent_exp(const Matrix& n);

/// Converts a matrix acting on the period vector (integrals over
/// B_1, B_2, A^1, A^2) into the induced action on the cohomology basis
/// (alpha_1, alpha_2, beta^1, beta^2). Uses ad(alpha_a) = int_{B_a} and
/// ad(beta^b) = -int_{A^b}; the result is D M^T D with D = diag(1,1,-1,-1).
Matrix cohomology_action(const Matrix& period_action);

/// Period functional (coefficients on G_1, G_2, z^1, z^2) that pairs with a
/// cohomology vector through the same relations.
Vector period_functional(const Vector& cohomology_vector);

struct WeightFiltration {
    int weight = 0;
    std::vector<Subspace> W; // W_0 .. W_{2n}

    std::vector<int> dimensions() const;
    /// W_k for any integer k (0 below, everything above).
    Subspace at(int k) const;
};

/// The weight filtration of N centered at n, from the closed formula
/// M_k = sum_{j >= max(0,-k)} ker N^{k+j+1} ∩ Im N^j with W_k = M_{k-n}.
/// Throws `NotNilpotent` unless N^{n+1} = 0.
WeightFiltration weight_filtration(const Matrix& n, int weight);

/// Checks N W_k ⊆ W_{k-2} for every k.
bool filtration_shifts(const WeightFiltration& w, const Matrix& n);
/// Checks that N^k maps W_{n+k} onto W_{n-k} modulo W_{n-k-1}, and that the
/// two gradeds have equal dimension, for k = 1..n.
bool filtration_graded_isomorphisms(const WeightFiltration& w, const Matrix& n);

struct GoodIntegralBasis {
    int n = 0;  // N^{n+1} = 0, N^n != 0
    Vector g0;
    Vector g;   // the partner with <g0, g> = 1
    Vector g1;
    Rational lambda;
    Rational m; // N g1 = m g0
};

/// Extracts (g0, g1, lambda, m) for the cohomology action N of a maximally
/// unipotent monodromy. g0 is the primitive integral generator of Im N^n
/// whose first nonzero coordinate is positive; g comes from an extended gcd
/// on the row g0^T J. Throws `NoUnimodularPartner` if that row has content
/// other than 1, `InvalidArgument` if Im N^n is not a line.
GoodIntegralBasis good_integral_basis(const Matrix& n, const SymplecticStructure& j);

/// (1/lambda) N^{n-1} x == -<g1, x> g0 + <g0, x> g1
bool projection_identity(const Matrix& n, const SymplecticStructure& j, const GoodIntegralBasis& b, const Vector& x);

struct BasisWitness {
    Vector g;
    Rational lambda;
    Rational m;
};

/// Verifies that (g0, g1) is a good integral basis for N by brute force:
/// both vectors integral and primitive, g0 in Im N^n, and some integral g in
/// the box [-radius, radius]^dim with <g0, g> = 1 and N^{n-1} g a positive
/// multiple of g1. Returns the first witness in lexicographic order.
std::optional<BasisWitness> find_good_basis_witness(const Matrix& n, const SymplecticStructure& j, const Vector& g0,
                                                    const Vector& g1, int radius);

struct Check {
    std::string group; // log | basis | filtration | lemmas
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    Matrix T_P;
    Matrix log_T_P;
    Matrix N_cohomology;
    GoodIntegralBasis basis;
    WeightFiltration filtration;
    std::vector<Check> checks;

    bool all_pass() const;
    /// Throws `CheckFailed` naming the first failed check.
    void require_all() const;
};

/// Recomputes every identity printed for the quintic-mirror monodromy and
/// records one check per identity.
Report quintic_mirror_report();

/// First entry where two matrices differ, rendered as "(row,col): got x, expected y"
/// with 1-based indices; empty when equal.
std::string first_difference(const Matrix& got, const Matrix& expected);

} // namespace mirrorkit::monodromy

#endif // MIRRORKIT_MONODROMY_HPP
