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

#include "mirrorkit/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "mirrorkit/errors.hpp"

namespace mirrorkit::monodromy {

namespace {

Vector basis_vector(int dim, int i)
{
    Vector v(dim);
    v[i] = 1;
    return v;
}

Vector row_times(const Vector& row, const Matrix& m)
{
    Vector out(m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            out[c] += row[r] * m(r, c);
    return out;
}

bool parallel_positive(const Vector& v, const Vector& direction, Rational& factor)
{
    auto it = std::find_if(direction.begin(), direction.end(), [](const Rational& x) { return !x.is_zero(); });
    if (it == direction.end())
        return false;
    const auto i = static_cast<std::size_t>(it - direction.begin());
    factor = v[i] / direction[i];
    return factor.sign() > 0 && linalg::scaled(direction, factor) == v;
}

void add_check(Report& r, const std::string& group, const std::string& name, bool passed, std::string detail = {})
{
    r.checks.push_back({group, name, passed, std::move(detail)});
}

std::string render_dims(const std::vector<int>& d)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ')';
    return os.str();
}

} // namespace

Rational SymplecticStructure::pair(const Vector& u, const Vector& v) const
{
    return linalg::dot(u, pairing * v);
}

bool SymplecticStructure::is_valid() const
{
    if (!pairing.is_square() || !pairing.is_integral())
        return false;
    if (pairing.transpose() != Rational(-1) * pairing)
        return false;
    const Rational det = pairing.determinant();
    return det == 1 || det == -1;
}

std::string SymplecticStructure::describe(const Vector& v) const
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        const Rational& c = v[i];
        if (c.sign() < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != 1)
            out += mag.str() + "*";
        out += i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

SymplecticStructure standard_symplectic(int k)
{
    SymplecticStructure s;
    s.pairing = Matrix(2 * k, 2 * k);
    for (int a = 0; a < k; ++a) {
        s.pairing(a, k + a) = 1;
        s.pairing(k + a, a) = -1;
    }
    for (int a = 1; a <= k; ++a)
        s.labels.push_back("alpha_" + std::to_string(a));
    for (int b = 1; b <= k; ++b)
        s.labels.push_back("beta^" + std::to_string(b));
    return s;
}

BuiltinData builtin_data()
{
    BuiltinData d;
    d.T = Matrix{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    d.A = Matrix{{-9, -3, 5, 3}, {0, 1, 0, -1}, {-20, -5, 11, 5}, {-15, 5, 8, -4}};
    d.J = standard_symplectic(2);
    d.N_cdgp = Matrix{{-1, 0, 0, 0}, {0, 0, 0, 1}, {2, 0, -1, 0}, {0, 1, 0, 0}};
    return d;
}

int nilpotency_index(const Matrix& n)
{
    if (!n.is_square())
        throw Error(ErrorCode::InvalidArgument, "nilpotency index of a non-square matrix");
    Matrix power = Matrix::identity(n.rows());
    for (int k = 0; k <= n.rows(); ++k) {
        if (power.is_zero())
            return k;
        power = power * n;
    }
    throw Error(ErrorCode::NotNilpotent, "N^" + std::to_string(n.rows()) + " is nonzero");
}

Matrix nilpotent_log(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorCode::InvalidArgument, "logarithm of a non-square matrix");
    const int dim = m.rows();
    const Matrix u = m - Matrix::identity(dim);
    if (!u.pow(dim).is_zero())
        throw Error(ErrorCode::NotUnipotent,
                    "(M - I)^" + std::to_string(dim) + " is nonzero; M is not unipotent");
    Matrix log(dim, dim);
    Matrix power = u;
    for (int j = 1; j < dim && !power.is_zero(); ++j) {
        const Rational c = Rational(j % 2 == 1 ? 1 : -1, j);
        log = log + c * power;
        power = power * u;
    }
    return log;
}

Matrix nilpotent_exp(const Matrix& n)
{
    const int index = nilpotency_index(n);
    const int dim = n.rows();
    Matrix sum = Matrix::identity(dim);
    Matrix term = Matrix::identity(dim);
    for (int j = 1; j < index; ++j) {
        term = Rational(1, j) * (term * n);
        sum = sum + term;
    }
    return sum;
}

Matrix cohomology_action(const Matrix& period_action)
{
    if (period_action.rows() != 4 || period_action.cols() != 4)
        throw Error(ErrorCode::InvalidArgument, "period action must be 4x4");
    const Matrix d = Matrix::diagonal({1, 1, -1, -1});
    return d * period_action.transpose() * d;
}

Vector period_functional(const Vector& cohomology_vector)
{
    if (cohomology_vector.size() != 4)
        throw Error(ErrorCode::InvalidArgument, "cohomology vector must have 4 entries");
    return Matrix::diagonal({1, 1, -1, -1}) * cohomology_vector;
}

std::vector<int> WeightFiltration::dimensions() const
{
    std::vector<int> d;
    for (const auto& s : W)
        d.push_back(s.dimension());
    return d;
}

Subspace WeightFiltration::at(int k) const
{
    const int ambient = W.empty() ? 0 : W.front().ambient();
    if (k < 0)
        return Subspace(ambient);
    if (k >= static_cast<int>(W.size()))
        return Subspace::whole(ambient);
    return W[k];
}

WeightFiltration weight_filtration(const Matrix& n, int weight)
{
    if (weight < 0)
        throw Error(ErrorCode::InvalidArgument, "weight must be >= 0");
    const int index = nilpotency_index(n);
    if (index > weight + 1)
        throw Error(ErrorCode::NotNilpotent,
                    "N^" + std::to_string(weight + 1) + " is nonzero (nilpotency index " + std::to_string(index) + ")");
    const int dim = n.rows();

    std::vector<Matrix> powers{Matrix::identity(dim)};
    for (int j = 1; j <= 2 * weight + 2; ++j)
        powers.push_back(powers.back() * n);
    auto power = [&](int j) -> const Matrix& { return powers[std::min<std::size_t>(j, powers.size() - 1)]; };

    WeightFiltration w;
    w.weight = weight;
    for (int k = 0; k <= 2 * weight; ++k) {
        const int centered = k - weight;
        Subspace m(dim);
        for (int j = std::max(0, -centered); j <= weight; ++j)
            m = m + intersect(Subspace::kernel(power(centered + j + 1)), Subspace::image(power(j)));
        w.W.push_back(std::move(m));
    }
    return w;
}

bool filtration_shifts(const WeightFiltration& w, const Matrix& n)
{
    for (int k = 0; k <= 2 * w.weight; ++k)
        if (!w.at(k - 2).contains(w.at(k).mapped(n)))
            return false;
    return true;
}

bool filtration_graded_isomorphisms(const WeightFiltration& w, const Matrix& n)
{
    const int c = w.weight;
    for (int k = 1; k <= c; ++k) {
        const int upper = w.at(c + k).dimension() - w.at(c + k - 1).dimension();
        const int lower = w.at(c - k).dimension() - w.at(c - k - 1).dimension();
        if (upper != lower)
            return false;
        const Subspace image = w.at(c + k).mapped(n.pow(k)) + w.at(c - k - 1);
        if (image != w.at(c - k))
            return false;
    }
    return true;
}

GoodIntegralBasis good_integral_basis(const Matrix& n, const SymplecticStructure& j)
{
    const int index = nilpotency_index(n);
    if (index < 2)
        throw Error(ErrorCode::InvalidArgument, "N must have nilpotency index >= 2");
    GoodIntegralBasis b;
    b.n = index - 1;

    const Subspace top = Subspace::image(n.pow(b.n));
    if (top.dimension() != 1)
        throw Error(ErrorCode::InvalidArgument,
                    "Im N^" + std::to_string(b.n) + " has dimension " + std::to_string(top.dimension()));
    b.g0 = linalg::primitive(top.basis().front());

    const Vector row = row_times(b.g0, j.pairing);
    if (!linalg::is_integral(row))
        throw Error(ErrorCode::NoUnimodularPartner, "pairing row of g0 is not integral");
    // extended gcd across the row: row . g = d at every step
    Integer d = 0;
    b.g = Vector(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero())
            continue;
        Integer g, s, t;
        const Integer a = row[i].numerator();
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), a.get_mpz_t());
        for (auto& x : b.g)
            x *= Rational(s);
        b.g[i] = Rational(t);
        d = g;
    }
    if (d != 1)
        throw Error(ErrorCode::NoUnimodularPartner,
                    "no integral g with <g0, g> = 1; the pairing row of g0 has content " + d.get_str());

    const Vector v = n.pow(b.n - 1) * b.g;
    if (linalg::is_zero(v))
        throw Error(ErrorCode::InvalidArgument, "N^{n-1} g vanishes");
    b.lambda = linalg::content(v);
    b.g1 = linalg::scaled(v, Rational(1) / b.lambda);

    const Vector ng1 = n * b.g1;
    const auto pivot = std::find_if(b.g0.begin(), b.g0.end(), [](const Rational& x) { return !x.is_zero(); });
    const auto i = static_cast<std::size_t>(pivot - b.g0.begin());
    b.m = ng1[i] / b.g0[i];
    if (linalg::scaled(b.g0, b.m) != ng1)
        throw Error(ErrorCode::CheckFailed, "N g1 is not a multiple of g0");
    return b;
}

bool projection_identity(const Matrix& n, const SymplecticStructure& j, const GoodIntegralBasis& b, const Vector& x)
{
    const Vector lhs = linalg::scaled(n.pow(b.n - 1) * x, Rational(1) / b.lambda);
    const Vector rhs = linalg::add(linalg::scaled(b.g0, -j.pair(b.g1, x)), linalg::scaled(b.g1, j.pair(b.g0, x)));
    return lhs == rhs;
}

std::optional<BasisWitness> find_good_basis_witness(const Matrix& n, const SymplecticStructure& j, const Vector& g0,
                                                    const Vector& g1, int radius)
{
    const int index = nilpotency_index(n);
    if (index < 2)
        return std::nullopt;
    const int top = index - 1;
    if (!linalg::is_integral(g0) || !linalg::is_integral(g1) || linalg::is_zero(g0) || linalg::is_zero(g1))
        return std::nullopt;
    if (linalg::content(g0) != 1 || linalg::content(g1) != 1)
        return std::nullopt;
    if (!Subspace::image(n.pow(top)).contains(g0))
        return std::nullopt;

    const Matrix p = n.pow(top - 1);
    const Vector row = row_times(g0, j.pairing);
    const int dim = n.rows();
    std::vector<int> digits(dim, -radius);
    while (true) {
        Vector g(dim);
        for (int i = 0; i < dim; ++i)
            g[i] = digits[i];
        BasisWitness w;
        if (linalg::dot(row, g) == 1 && parallel_positive(p * g, g1, w.lambda)) {
            w.g = g;
            const Vector ng1 = n * g1;
            const auto pivot = std::find_if(g0.begin(), g0.end(), [](const Rational& x) { return !x.is_zero(); });
            const auto i = static_cast<std::size_t>(pivot - g0.begin());
            w.m = ng1[i] / g0[i];
            if (linalg::scaled(g0, w.m) == ng1)
                return w;
        }
        int pos = dim - 1;
        while (pos >= 0 && digits[pos] == radius)
            digits[pos--] = -radius;
        if (pos < 0)
            break;
        ++digits[pos];
    }
    return std::nullopt;
}

bool Report::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::require_all() const
{
    for (const auto& c : checks)
        if (!c.passed)
            throw Error(ErrorCode::CheckFailed, c.group + "/" + c.name + ": " + c.detail);
}

std::string first_difference(const Matrix& got, const Matrix& expected)
{
    if (got.rows() != expected.rows() || got.cols() != expected.cols())
        return "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + ", expected " +
               std::to_string(expected.rows()) + "x" + std::to_string(expected.cols());
    for (int r = 0; r < got.rows(); ++r)
        for (int c = 0; c < got.cols(); ++c)
            if (got(r, c) != expected(r, c))
                return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): got " + got(r, c).str() +
                       ", expected " + expected(r, c).str();
    return {};
}

Report quintic_mirror_report()
{
    const BuiltinData data = builtin_data();
    const int dim = 4;
    const Matrix id = Matrix::identity(dim);
    Report r;

    auto matrix_check = [&r](const std::string& group, const std::string& name, const Matrix& got,
                             const Matrix& expected) {
        const std::string diff = first_difference(got, expected);
        add_check(r, group, name, diff.empty(), diff.empty() ? got.str() : diff);
    };

    // log
    const Rational det_t = data.T.determinant();
    const Rational det_a = data.A.determinant();
    add_check(r, "log", "builtin_unimodular", (det_t == 1 || det_t == -1) && (det_a == 1 || det_a == -1),
              "det T = " + det_t.str() + ", det A = " + det_a.str());
    r.T_P = data.T.inverse() * data.A.inverse();
    add_check(r, "log", "tp_integral", r.T_P.is_integral(), r.T_P.str());
    try {
        r.log_T_P = nilpotent_log(r.T_P);
        add_check(r, "log", "tp_unipotent", true, "(T_P - I)^4 = 0");
    } catch (const Error& e) {
        add_check(r, "log", "tp_unipotent", false, e.what());
        return r;
    }
    const Matrix& n = r.log_T_P;
    add_check(r, "log", "log_cubed_nonzero", !n.pow(3).is_zero());
    add_check(r, "log", "log_fourth_zero", n.pow(4).is_zero());
    matrix_check("log", "log_squared_matches", n.pow(2), Matrix{{0, 5, 0, 0}, {0, 0, 0, 0}, {0, 10, 0, 0}, {-10, 0, 5, 0}});
    matrix_check("log", "log_cubed_matches", n.pow(3), Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -5, 0, 0}});
    matrix_check("log", "exp_log_roundtrip", nilpotent_exp(n), r.T_P);
    {
        const Matrix u = data.T - id;
        add_check(r, "log", "t_index_not_maximal", (u * u).is_zero() && !u.is_zero(), "(T - I)^2 = 0");
    }
    matrix_check("log", "a_fifth_power_identity", data.A.pow(5), id);

    // basis
    r.N_cohomology = cohomology_action(n);
    const Matrix& nc = r.N_cohomology;
    const Vector alpha1 = basis_vector(dim, 0), alpha2 = basis_vector(dim, 1);
    const Vector beta1 = basis_vector(dim, 2), beta2 = basis_vector(dim, 3);
    {
        const Vector v2 = nc.pow(2) * beta2;
        const Vector v3 = nc.pow(3) * beta2;
        const Vector e2 = linalg::add(linalg::scaled(alpha1, 10), linalg::scaled(beta1, 5));
        add_check(r, "basis", "n2_beta2", v2 == e2, data.J.describe(v2));
        add_check(r, "basis", "n3_beta2", v3 == linalg::scaled(alpha2, 5), data.J.describe(v3));
    }
    try {
        r.basis = good_integral_basis(nc, data.J);
    } catch (const Error& e) {
        add_check(r, "basis", "good_integral_basis", false, e.what());
        return r;
    }
    const GoodIntegralBasis& b = r.basis;
    const Vector expected_g1 = linalg::add(linalg::scaled(alpha1, 2), beta1);
    add_check(r, "basis", "g0", b.g0 == alpha2, data.J.describe(b.g0));
    add_check(r, "basis", "g", b.g == beta2 && data.J.pair(b.g0, b.g) == 1, data.J.describe(b.g));
    add_check(r, "basis", "lambda", b.lambda == 5, b.lambda.str());
    add_check(r, "basis", "g1", b.g1 == expected_g1, data.J.describe(b.g1));
    add_check(r, "basis", "m", b.m == 1, b.m.str());
    {
        const Vector w1 = period_functional(b.g1);
        const Vector w2 = period_functional(b.g0);
        add_check(r, "basis", "w1_row", w1 == data.N_cdgp.row(2), linalg::to_string(w1));
        add_check(r, "basis", "w2_row", w2 == data.N_cdgp.row(3), linalg::to_string(w2));
    }

    // filtration
    r.filtration = weight_filtration(n, 3);
    const auto dims = r.filtration.dimensions();
    add_check(r, "filtration", "dimensions", dims == std::vector<int>{1, 1, 2, 2, 3, 3, 4}, render_dims(dims));
    add_check(r, "filtration", "shift", filtration_shifts(r.filtration, n));
    add_check(r, "filtration", "graded_isomorphisms", filtration_graded_isomorphisms(r.filtration, n));
    add_check(r, "filtration", "top_odd_graded_zero", r.filtration.at(5) == r.filtration.at(4),
              "W_5 / W_4 = 0");

    // lemmas
    {
        const Matrix iso = nc.transpose() * data.J.pairing + data.J.pairing * nc;
        const std::string diff = first_difference(iso, Matrix(dim, dim));
        add_check(r, "lemmas", "infinitesimal_isometry", diff.empty(), diff.empty() ? "N^T J + J N = 0" : diff);
        const Matrix tc = cohomology_action(r.T_P);
        add_check(r, "lemmas", "monodromy_symplectic", tc.transpose() * data.J.pairing * tc == data.J.pairing);
    }
    const int im3 = Subspace::image(nc.pow(3)).dimension();
    const int im2 = Subspace::image(nc.pow(2)).dimension();
    add_check(r, "lemmas", "dim_im_n3", im3 == 1, std::to_string(im3));
    add_check(r, "lemmas", "dim_im_n2", im2 == 2, std::to_string(im2));
    for (int i = 0; i < dim; ++i) {
        const Vector x = basis_vector(dim, i);
        add_check(r, "lemmas", "projection_" + data.J.labels[i], projection_identity(nc, data.J, b, x));
    }
    for (int l = 0; l <= 1; ++l) {
        const Rational s = l == 0 ? 1 : -1;
        for (int k = -2; k <= 2; ++k) {
            const Vector g0 = linalg::scaled(b.g0, s);
            const Vector g1 = linalg::add(linalg::scaled(b.g0, k), linalg::scaled(b.g1, s));
            const auto w = find_good_basis_witness(nc, data.J, g0, g1, 3);
            const std::string name = "basis_change_k" + std::to_string(k) + "_l" + std::to_string(l);
            if (!w) {
                add_check(r, "lemmas", name, false, "no witness g in [-3,3]^4");
                continue;
            }
            add_check(r, "lemmas", name, w->m == b.m,
                      "g = " + data.J.describe(w->g) + ", lambda = " + w->lambda.str() + ", m = " + w->m.str());
        }
    }
    return r;
}

} // namespace mirrorkit::monodromy
