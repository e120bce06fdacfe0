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

#ifndef MIRRORKIT_MATRIX_HPP
#define MIRRORKIT_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mirrorkit/rational.hpp"

namespace mirrorkit::linalg {

using Vector = std::vector<Rational>;

/// Dense matrix over the rationals. Integer matrices are the special case
/// where every entry has denominator 1 (see `is_integral`).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix identity(int n);
    static Matrix diagonal(const Vector& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(int r, int c) { return data_[index(r, c)]; }
    const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }
    Vector row(int r) const;
    Vector column(int c) const;

    Matrix transpose() const;
    Matrix pow(int k) const;
    Rational determinant() const;
    /// Throws `InvalidArgument` for a singular matrix.
    Matrix inverse() const;
    int rank() const;

    bool is_zero() const;
    bool is_integral() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// "[[a,b],[c,d]]" with exact entries.
    std::string str() const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<int> row_reduce(Matrix& m);

Rational dot(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& s);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
bool is_integral(const Vector& v);
/// Positive rational c with v/c a primitive integer vector (v nonzero).
Rational content(const Vector& v);
/// v/content(v), then sign-normalized so the first nonzero entry is positive.
Vector primitive(const Vector& v);
std::string to_string(const Vector& v);

/// Linear subspace of Q^n, stored as a reduced row-echelon basis so that
/// equal subspaces have identical representations.
class Subspace {
public:
    explicit Subspace(int ambient);
    static Subspace span(int ambient, const std::vector<Vector>& vectors);
    static Subspace whole(int ambient);
    /// {x : M x = 0}
    static Subspace kernel(const Matrix& m);
    /// Column space of M.
    static Subspace image(const Matrix& m);

    int ambient() const { return ambient_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Orthogonal complement for the standard dot product.
    Subspace complement() const;
    /// M applied to every vector of the subspace.
    Subspace mapped(const Matrix& m) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    int ambient_;
    std::vector<Vector> basis_;
};

} // namespace mirrorkit::linalg

#endif // MIRRORKIT_MATRIX_HPP
