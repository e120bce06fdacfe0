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

#include "mirrorkit/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mirrorkit/errors.hpp"

namespace mirrorkit::linalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
    const int n = static_cast<int>(rows.size());
    const int m = n == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix out(n, m);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != m)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (int c = 0; c < m; ++c)
            out(r, c) = rows[r][c];
    }
    return out;
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d)
{
    const int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = d[i];
    return m;
}

std::size_t Matrix::index(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

Vector Matrix::row(int r) const
{
    Vector v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c)
        v.push_back((*this)(r, c));
    return v;
}

Vector Matrix::column(int c) const
{
    Vector v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::pow(int k) const
{
    if (!is_square())
        throw Error(ErrorCode::InvalidArgument, "power of a non-square matrix");
    if (k < 0)
        return inverse().pow(-k);
    Matrix result = identity(rows_);
    for (int i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

Rational Matrix::determinant() const
{
    if (!is_square())
        throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    Matrix m = *this;
    Rational det = 1;
    const int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero())
                continue;
            const Rational f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

Matrix Matrix::inverse() const
{
    if (!is_square())
        throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
    const int n = rows_;
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw Error(ErrorCode::InvalidArgument, "matrix is singular");
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

int Matrix::rank() const
{
    Matrix m = *this;
    return static_cast<int>(row_reduce(m).size());
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Matrix::is_integral() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(r, k).is_zero())
                continue;
            for (int c = 0; c < b.cols(); ++c)
                out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
    Matrix out = a;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (static_cast<int>(v.size()) != a.cols())
        throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    Vector out(a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out[r] += a(r, c) * v[c];
    return out;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < cols_; ++c)
            os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<int> row_reduce(Matrix& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (int c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Rational f = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "dot product of vectors of different length");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vector scaled(const Vector& v, const Rational& s)
{
    Vector out = v;
    for (auto& x : out)
        x *= s;
    return out;
}

Vector add(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "vector lengths differ");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector subtract(const Vector& a, const Vector& b)
{
    return add(a, scaled(b, Rational(-1)));
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_integral(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
}

Rational content(const Vector& v)
{
    if (is_zero(v))
        throw Error(ErrorCode::InvalidArgument, "content of the zero vector");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& x : v) {
        if (x.is_zero())
            continue;
        num_gcd = gcd(num_gcd, x.numerator());
        den_lcm = lcm(den_lcm, x.denominator());
    }
    return Rational(num_gcd, den_lcm);
}

Vector primitive(const Vector& v)
{
    Vector p = scaled(v, Rational(1) / content(v));
    const auto first = std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); });
    if (first->sign() < 0)
        p = scaled(p, Rational(-1));
    return p;
}

std::string to_string(const Vector& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

Subspace::Subspace(int ambient) : ambient_(ambient) {}

Subspace Subspace::span(int ambient, const std::vector<Vector>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    Matrix m = Matrix::from_rows(vectors);
    if (m.cols() != ambient)
        throw Error(ErrorCode::InvalidArgument, "vector length differs from ambient dimension");
    const auto pivots = row_reduce(m);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        s.basis_.push_back(m.row(static_cast<int>(r)));
    return s;
}

Subspace Subspace::whole(int ambient)
{
    return Subspace::image(Matrix::identity(ambient));
}

Subspace Subspace::kernel(const Matrix& m)
{
    Matrix r = m;
    const auto pivots = row_reduce(r);
    std::vector<Vector> basis;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return span(m.cols(), basis);
}

Subspace Subspace::image(const Matrix& m)
{
    std::vector<Vector> cols;
    for (int c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return span(m.rows(), cols);
}

bool Subspace::contains(const Vector& v) const
{
    auto vectors = basis_;
    vectors.push_back(v);
    return span(ambient_, vectors).dimension() == dimension();
}

bool Subspace::contains(const Subspace& other) const
{
    return (*this + other).dimension() == dimension();
}

Subspace Subspace::complement() const
{
    if (basis_.empty())
        return whole(ambient_);
    return kernel(Matrix::from_rows(basis_));
}

Subspace Subspace::mapped(const Matrix& m) const
{
    std::vector<Vector> images;
    for (const auto& b : basis_)
        images.push_back(m * b);
    return span(m.rows(), images);
}

Subspace operator+(const Subspace& a, const Subspace& b)
{
    if (a.ambient_ != b.ambient_)
        throw Error(ErrorCode::InvalidArgument, "subspaces of different ambient spaces");
    auto vectors = a.basis_;
    vectors.insert(vectors.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.ambient_, vectors);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    return (a.complement() + b.complement()).complement();
}

} // namespace mirrorkit::linalg
