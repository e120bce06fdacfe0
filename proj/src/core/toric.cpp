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

#include "mirrorkit/toric.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mirrorkit/errors.hpp"

namespace mirrorkit::toric {

namespace detail {
extern const char* const kFigureStepI;
extern const char* const kFigureStepIIA;
extern const char* const kFigureStepIIB;
extern const char* const kFigureStepIII;
} // namespace detail

namespace {

using Point3 = std::array<Rational, 3>;

long sum(const Ray& r)
{
    return r[0] + r[1] + r[2];
}

long gcd3(long a, long b, long c)
{
    return std::gcd(std::gcd(a, b), c);
}

Ray cross(const Ray& a, const Ray& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long dot(const Ray& a, const Ray& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rational dot(const Point3& a, const Point3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point3 slice_point(const Ray& r)
{
    const long s = sum(r);
    if (s <= 0)
        throw Error(ErrorCode::RayOutsideSupport, "ray " + to_string(r) + " does not meet the slice");
    return {Rational(Integer(5 * r[0]), Integer(s)), Rational(Integer(5 * r[1]), Integer(s)),
            Rational(Integer(5 * r[2]), Integer(s))};
}

PicturePoint picture_of(const Point3& s)
{
    return {Rational(8) * s[2] + Rational(4) * s[1], Rational(6) * s[1]};
}

Rational orient(const PicturePoint& a, const PicturePoint& b, const PicturePoint& c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const PicturePoint& a, const PicturePoint& b, const PicturePoint& p)
{
    if (!orient(a, b, p).is_zero())
        return false;
    const Rational t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    const Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return t.sign() >= 0 && t <= len;
}

std::vector<PicturePoint> polygon(const Cone& c)
{
    std::vector<PicturePoint> p;
    for (const auto& r : c.rays)
        p.push_back(picture_point(r));
    return p;
}

Rational twice_area(const std::vector<PicturePoint>& p)
{
    Rational a;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& u = p[i];
        const auto& v = p[(i + 1) % p.size()];
        a += u.x * v.y - u.y * v.x;
    }
    return a;
}

/// Closed containment in a counterclockwise convex polygon.
bool inside(const std::vector<PicturePoint>& poly, const PicturePoint& p)
{
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (orient(poly[i], poly[(i + 1) % poly.size()], p).sign() < 0)
            return false;
    return true;
}

Ray ray_through(const Point3& p)
{
    Integer den = 1;
    for (const auto& x : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    Ray v{};
    for (int i = 0; i < 3; ++i) {
        const Integer n = p[i].numerator() * (den / p[i].denominator());
        if (!n.fits_slong_p())
            throw Error(ErrorCode::InvalidArgument, "ray coordinate overflow");
        v[i] = n.get_si();
    }
    return Lattice::primitive(v);
}

Edge make_edge(const Ray& a, const Ray& b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool is_face(const Cone& c, const std::vector<Ray>& tau)
{
    const auto& r = c.rays;
    auto pos = [&](const Ray& x) { return static_cast<long>(std::find(r.begin(), r.end(), x) - r.begin()); };
    for (const auto& x : tau)
        if (pos(x) == static_cast<long>(r.size()))
            return false;
    if (tau.size() == 1)
        return true;
    if (tau.size() == 2) {
        const long n = static_cast<long>(r.size());
        const long d = (pos(tau[0]) - pos(tau[1]) + n) % n;
        return d == 1 || d == n - 1;
    }
    return tau.size() == r.size();
}

std::vector<Point3> clip(const std::vector<Point3>& poly, const Point3& d)
{
    std::vector<Point3> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point3& a = poly[i];
        const Point3& b = poly[(i + 1) % n];
        const Rational fa = dot(d, a);
        const Rational fb = dot(d, b);
        if (fa.sign() <= 0)
            out.push_back(a);
        if ((fa.sign() < 0 && fb.sign() > 0) || (fa.sign() > 0 && fb.sign() < 0)) {
            const Rational t = fa / (fa - fb);
            out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])});
        }
    }
    std::vector<Point3> res;
    for (const auto& p : out)
        if (res.empty() || res.back() != p)
            res.push_back(p);
    if (res.size() > 1 && res.front() == res.back())
        res.pop_back();
    return res;
}

std::vector<Point3> drop_collinear(std::vector<Point3> poly)
{
    bool changed = true;
    while (changed && poly.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& a = poly[(i + poly.size() - 1) % poly.size()];
            const auto& c = poly[(i + 1) % poly.size()];
            if (orient(picture_of(a), picture_of(poly[i]), picture_of(c)).is_zero()) {
                poly.erase(poly.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return poly;
}

struct Generator {
    std::vector<long> pairing;
    Ray w; // m = w / det
    long det = 1;

    Point3 m() const
    {
        return {Rational(Integer(w[0]), Integer(det)), Rational(Integer(w[1]), Integer(det)),
                Rational(Integer(w[2]), Integer(det))};
    }
};

/// Minimal generators of the monomial ideal of the center inside cone c.
std::vector<Generator> ideal_generators(const Cone& c, const std::vector<std::vector<Ray>>& faces, int bound)
{
    const auto& r = c.rays;
    const long det = dot(r[0], cross(r[1], r[2]));
    if (det == 0)
        throw Error(ErrorCode::InvalidArgument, "degenerate cone");
    // columns of R^{-1} * det are the cross products of the other two rows
    const Ray c0 = cross(r[1], r[2]);
    const Ray c1 = cross(r[2], r[0]);
    const Ray c2 = cross(r[0], r[1]);
    const auto basis = Lattice::basis();

    std::vector<Generator> found;
    for (long v0 = 0; v0 <= bound; ++v0)
        for (long v1 = 0; v1 <= bound; ++v1)
            for (long v2 = 0; v2 <= bound; ++v2) {
                const Ray w{v0 * c0[0] + v1 * c1[0] + v2 * c2[0], v0 * c0[1] + v1 * c1[1] + v2 * c2[1],
                            v0 * c0[2] + v1 * c1[2] + v2 * c2[2]};
                // m = w / det must pair integrally with N
                if (std::any_of(basis.begin(), basis.end(), [&](const Ray& b) { return dot(w, b) % det != 0; }))
                    continue;
                std::vector<long> p;
                bool nonnegative = true;
                for (const auto& x : r) {
                    p.push_back(dot(w, x) / det);
                    nonnegative = nonnegative && p.back() >= 0;
                }
                if (!nonnegative)
                    continue;
                const bool in_ideal = std::all_of(faces.begin(), faces.end(), [&](const std::vector<Ray>& tau) {
                    return std::any_of(tau.begin(), tau.end(), [&](const Ray& x) {
                        return p[std::find(r.begin(), r.end(), x) - r.begin()] > 0;
                    });
                });
                if (!in_ideal)
                    continue;
                found.push_back({std::move(p), w, det});
            }

    std::stable_sort(found.begin(), found.end(), [](const Generator& a, const Generator& b) {
        const long sa = std::accumulate(a.pairing.begin(), a.pairing.end(), 0L);
        const long sb = std::accumulate(b.pairing.begin(), b.pairing.end(), 0L);
        return sa != sb ? sa < sb : a.pairing < b.pairing;
    });
    std::vector<Generator> minimal;
    for (auto& g : found) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Generator& k) {
            for (std::size_t i = 0; i < g.pairing.size(); ++i)
                if (k.pairing[i] > g.pairing[i])
                    return false;
            return true;
        });
        if (!dominated)
            minimal.push_back(std::move(g));
    }
    return minimal;
}

std::set<Edge> elementary_segments(const std::vector<std::pair<PicturePoint, PicturePoint>>& segments,
                                   const std::vector<std::pair<PicturePoint, Ray>>& points, std::string& error)
{
    std::set<Edge> out;
    for (const auto& [a, b] : segments) {
        std::vector<std::pair<Rational, Ray>> on;
        bool has_a = false, has_b = false;
        for (const auto& [p, ray] : points) {
            if (!on_segment(a, b, p))
                continue;
            has_a = has_a || p == a;
            has_b = has_b || p == b;
            on.emplace_back((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y), ray);
        }
        if (!has_a || !has_b) {
            const PicturePoint& miss = has_a ? b : a;
            error = "segment endpoint (" + miss.x.str() + "," + miss.y.str() + ") is not a ray of the fan";
            return {};
        }
        std::sort(on.begin(), on.end());
        for (std::size_t i = 0; i + 1 < on.size(); ++i)
            out.insert(make_edge(on[i].second, on[i + 1].second));
    }
    return out;
}

std::string render(const Edge& e)
{
    return to_string(e.first) + "-" + to_string(e.second);
}

std::string svg_number(const Rational& r)
{
    if (r.is_integer())
        return r.str();
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << r.mpq().get_d();
    return os.str();
}

} // namespace

std::string to_string(const Ray& r)
{
    return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]) + ")";
}

bool Lattice::contains(const Ray& v)
{
    return sum(v) % kIndex == 0;
}

std::array<Ray, 3> Lattice::basis()
{
    return {Ray{1, 0, 4}, Ray{0, 1, 4}, Ray{0, 0, 5}};
}

Ray Lattice::coordinates(const Ray& v)
{
    if (!contains(v))
        throw Error(ErrorCode::InvalidArgument, to_string(v) + " is not in the lattice (coordinate sum " +
                                                    std::to_string(sum(v)) + " is not divisible by 5)");
    return {v[0], v[1], (v[2] - 4 * v[0] - 4 * v[1]) / kIndex};
}

Ray Lattice::primitive(const Ray& v)
{
    const long g = gcd3(v[0], v[1], v[2]);
    if (g == 0)
        throw Error(ErrorCode::InvalidArgument, "zero vector has no ray");
    Ray u{v[0] / g, v[1] / g, v[2] / g};
    const long k = kIndex / std::gcd(sum(u), kIndex);
    return {k * u[0], k * u[1], k * u[2]};
}

bool Lattice::is_primitive(const Ray& v)
{
    return contains(v) && gcd3(v[0], v[1], v[2]) != 0 && primitive(v) == v;
}

long Lattice::determinant(const Ray& a, const Ray& b, const Ray& c)
{
    return dot(coordinates(a), cross(coordinates(b), coordinates(c)));
}

long Lattice::edge_index(const Ray& a, const Ray& b)
{
    const Ray m = cross(coordinates(a), coordinates(b));
    return std::abs(gcd3(m[0], m[1], m[2]));
}

PicturePoint picture_point(const Ray& r)
{
    return picture_of(slice_point(r));
}

Fan Fan::single_cone(std::vector<Ray> rays)
{
    if (rays.size() < 3)
        throw Error(ErrorCode::InvalidArgument, "a maximal cone needs at least three rays");
    for (const auto& r : rays)
        if (!Lattice::is_primitive(r))
            throw Error(ErrorCode::InvalidArgument, to_string(r) + " is not a primitive lattice vector");
    // counterclockwise around the centroid of the slice polygon
    PicturePoint centre{Rational(0), Rational(0)};
    for (const auto& r : rays) {
        const auto p = picture_point(r);
        centre.x += p.x;
        centre.y += p.y;
    }
    centre.x /= Rational(static_cast<long>(rays.size()));
    centre.y /= Rational(static_cast<long>(rays.size()));
    auto half = [&](const PicturePoint& p) {
        const Rational dy = p.y - centre.y;
        return dy.sign() > 0 || (dy.is_zero() && (p.x - centre.x).sign() > 0) ? 0 : 1;
    };
    std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
        const auto pa = picture_point(a), pb = picture_point(b);
        if (half(pa) != half(pb))
            return half(pa) < half(pb);
        return orient(centre, pa, pb).sign() > 0;
    });
    Fan f;
    f.support_ = Cone{rays};
    if (twice_area(polygon(f.support_)).sign() <= 0)
        throw Error(ErrorCode::InvalidArgument, "rays do not span a 3-dimensional cone");
    f.cones_ = {f.support_};
    return f;
}

Fan Fan::from_cones(const Cone& support, std::vector<Cone> cones)
{
    Fan f;
    f.support_ = support;
    for (auto& c : cones)
        if (twice_area(polygon(c)).sign() < 0)
            std::reverse(c.rays.begin(), c.rays.end());
    f.cones_ = std::move(cones);
    return f;
}

std::vector<Ray> Fan::rays() const
{
    std::set<Ray> s;
    for (const auto& c : cones_)
        s.insert(c.rays.begin(), c.rays.end());
    return {s.begin(), s.end()};
}

std::vector<Edge> Fan::edges() const
{
    std::set<Edge> s;
    for (const auto& c : cones_)
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            s.insert(make_edge(c.rays[i], c.rays[(i + 1) % c.rays.size()]));
    return {s.begin(), s.end()};
}

std::vector<Cone> Fan::faces() const
{
    std::vector<Cone> out;
    for (const auto& r : rays())
        out.push_back(Cone{{r}});
    for (const auto& e : edges())
        out.push_back(Cone{{e.first, e.second}});
    out.insert(out.end(), cones_.begin(), cones_.end());
    return out;
}

bool Fan::is_simplicial() const
{
    return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return c.is_simplicial(); });
}

int Fan::count_cones_with(std::size_t ray_count) const
{
    return static_cast<int>(
        std::count_if(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.rays.size() == ray_count; }));
}

std::vector<std::vector<Ray>> Fan::canonical() const
{
    std::vector<std::vector<Ray>> out;
    for (const auto& c : cones_) {
        auto r = c.rays;
        std::sort(r.begin(), r.end());
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Fan quotient_cone()
{
    return Fan::single_cone({Ray{5, 0, 0}, Ray{0, 5, 0}, Ray{0, 0, 5}});
}

Fan star_subdivide(const Fan& fan, std::span<const Ray> rays)
{
    Fan current = fan;
    for (const auto& v : rays) {
        if (!Lattice::contains(v))
            throw Error(ErrorCode::InvalidArgument, to_string(v) + " is not in the lattice (coordinate sum " +
                                                        std::to_string(sum(v)) + " is not divisible by 5)");
        if (sum(v) <= 0)
            throw Error(ErrorCode::RayOutsideSupport, to_string(v) + " lies outside the support");
        const Ray p = Lattice::primitive(v);
        const PicturePoint pp = picture_point(p);
        if (!inside(polygon(current.support()), pp))
            throw Error(ErrorCode::RayOutsideSupport, to_string(v) + " lies outside the support");
        const auto existing = current.rays();
        if (std::find(existing.begin(), existing.end(), p) != existing.end())
            continue;

        std::vector<Cone> next;
        for (const auto& c : current.cones()) {
            const auto poly = polygon(c);
            if (!inside(poly, pp)) {
                next.push_back(c);
                continue;
            }
            for (std::size_t i = 0; i < c.rays.size(); ++i) {
                const std::size_t j = (i + 1) % c.rays.size();
                if (on_segment(poly[i], poly[j], pp))
                    continue;
                next.push_back(Cone{{p, c.rays[i], c.rays[j]}});
            }
        }
        current = Fan::from_cones(current.support(), std::move(next));
    }
    return current;
}

Fan blowup(const Fan& fan, const std::vector<std::vector<Ray>>& center, int bound)
{
    if (bound < 1)
        throw Error(ErrorCode::InvalidArgument, "enumeration bound must be >= 1");
    std::vector<Cone> next;
    for (const auto& c : fan.cones()) {
        std::vector<std::vector<Ray>> faces;
        for (const auto& tau : center)
            if (is_face(c, tau))
                faces.push_back(tau);
        if (faces.empty()) {
            next.push_back(c);
            continue;
        }
        const auto gens = ideal_generators(c, faces, bound);
        std::vector<Point3> ms;
        for (const auto& g : gens)
            ms.push_back(g.m());
        std::vector<Point3> base;
        for (const auto& r : c.rays)
            base.push_back(slice_point(r));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Point3> region = base;
            for (std::size_t j = 0; j < gens.size() && region.size() >= 3; ++j) {
                if (i == j)
                    continue;
                const auto& a = ms[i];
                const auto& b = ms[j];
                region = clip(region, {a[0] - b[0], a[1] - b[1], a[2] - b[2]});
            }
            if (region.size() < 3)
                continue;
            std::vector<PicturePoint> pic;
            for (const auto& p : region)
                pic.push_back(picture_of(p));
            if (twice_area(pic).is_zero())
                continue;
            Cone piece;
            for (const auto& p : drop_collinear(region))
                piece.rays.push_back(ray_through(p));
            next.push_back(std::move(piece));
        }
    }
    return Fan::from_cones(fan.support(), std::move(next));
}

std::vector<Edge> singular_edges(const Fan& fan)
{
    std::vector<Edge> out;
    for (const auto& e : fan.edges())
        if (Lattice::edge_index(e.first, e.second) != 1)
            out.push_back(e);
    return out;
}

Fan triangulate_through(const Fan& fan, std::span<const Ray> apexes)
{
    std::vector<Cone> next;
    for (const auto& c : fan.cones()) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            if (std::find(apexes.begin(), apexes.end(), c.rays[i]) != apexes.end())
                hits.push_back(i);
        if (c.rays.size() <= 3 || hits.size() != 1) {
            next.push_back(c);
            continue;
        }
        const std::size_t n = c.rays.size();
        const std::size_t a = hits.front();
        for (std::size_t k = 1; k + 1 < n; ++k)
            next.push_back(Cone{{c.rays[a], c.rays[(a + k) % n], c.rays[(a + k + 1) % n]}});
    }
    return Fan::from_cones(fan.support(), std::move(next));
}

bool verify_smooth(const Fan& fan)
{
    for (const auto& c : fan.cones()) {
        if (c.rays.size() != 3)
            return false;
        if (std::abs(Lattice::determinant(c.rays[0], c.rays[1], c.rays[2])) != 1)
            return false;
    }
    return true;
}

bool verify_crepant(const Fan& fan)
{
    const auto rays = fan.rays();
    return std::all_of(rays.begin(), rays.end(),
                       [](const Ray& r) { return Lattice::is_primitive(r) && sum(r) == Lattice::kIndex; });
}

int cone_count(const Fan& fan)
{
    return static_cast<int>(fan.cones().size());
}

FanValidity check_fan(const Fan& fan)
{
    FanValidity v;
    auto fail = [&v](const std::string& what) {
        if (v.detail.empty())
            v.detail = what;
    };
    const auto rays = fan.rays();

    v.members = true;
    for (const auto& r : rays)
        if (!Lattice::is_primitive(r)) {
            v.members = false;
            fail(to_string(r) + " is not a primitive lattice vector");
        }

    v.oriented = true;
    Rational total;
    for (const auto& c : fan.cones()) {
        const auto poly = polygon(c);
        for (std::size_t i = 0; i < poly.size(); ++i)
            if (orient(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]).sign() <= 0) {
                v.oriented = false;
                fail("cone at " + to_string(c.rays[i]) + " is not strictly convex and counterclockwise");
                break;
            }
        total += twice_area(poly);
    }
    const auto support = polygon(fan.support());
    v.support = total == twice_area(support);
    if (!v.support)
        fail("cone areas do not add up to the support");

    std::map<std::pair<Ray, Ray>, int> directed;
    for (const auto& c : fan.cones())
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            ++directed[{c.rays[i], c.rays[(i + 1) % c.rays.size()]}];
    v.face_to_face = true;
    for (const auto& [e, count] : directed) {
        const auto a = picture_point(e.first);
        const auto b = picture_point(e.second);
        bool boundary = false;
        for (std::size_t i = 0; i < support.size(); ++i) {
            const auto& s = support[i];
            const auto& t = support[(i + 1) % support.size()];
            if (on_segment(s, t, a) && on_segment(s, t, b))
                boundary = true;
        }
        const bool reverse = directed.count({e.second, e.first}) == 1;
        if (count != 1 || (boundary && reverse) || (!boundary && !reverse)) {
            v.face_to_face = false;
            fail("edge " + render(make_edge(e.first, e.second)) + " is not shared face to face");
            break;
        }
    }

    v.no_stray_rays = true;
    for (const auto& r : rays) {
        const auto p = picture_point(r);
        for (const auto& c : fan.cones()) {
            if (std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end())
                continue;
            if (inside(polygon(c), p)) {
                v.no_stray_rays = false;
                fail("ray " + to_string(r) + " lies in a cone it does not generate");
                break;
            }
        }
    }
    return v;
}

bool refines(const Fan& fine, const Fan& coarse)
{
    for (const auto& c : fine.cones()) {
        const auto poly = polygon(c);
        const bool contained = std::any_of(coarse.cones().begin(), coarse.cones().end(), [&](const Cone& big) {
            const auto outer = polygon(big);
            return std::all_of(poly.begin(), poly.end(), [&](const PicturePoint& p) { return inside(outer, p); });
        });
        if (!contained)
            return false;
    }
    return true;
}

FigureDiagram parse_figure(std::string_view text)
{
    FigureDiagram d;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword))
            continue;
        bool ok = true;
        if (keyword == "step") {
            ok = static_cast<bool>(fields >> d.step);
        } else if (keyword == "line") {
            FigureDiagram::Line l{};
            ok = static_cast<bool>(fields >> l.x >> l.y >> l.dx >> l.dy >> l.length);
            d.lines.push_back(l);
        } else if (keyword == "corner" || keyword == "dot") {
            FigureDiagram::Label l{};
            ok = static_cast<bool>(fields >> l.x >> l.y >> l.ray[0] >> l.ray[1] >> l.ray[2]);
            l.corner = keyword == "corner";
            d.labels.push_back(l);
        } else {
            ok = false;
        }
        std::string extra;
        if (!ok || (fields >> extra))
            throw Error(ErrorCode::InvalidArgument, "figure line " + std::to_string(number) + ": cannot parse '" +
                                                        line + "'");
    }
    return d;
}

FigureDiagram figure_diagram(const std::string& step)
{
    if (step == "I")
        return parse_figure(detail::kFigureStepI);
    if (step == "IIA")
        return parse_figure(detail::kFigureStepIIA);
    if (step == "IIB")
        return parse_figure(detail::kFigureStepIIB);
    if (step == "III")
        return parse_figure(detail::kFigureStepIII);
    throw Error(ErrorCode::InvalidArgument, "unknown step '" + step + "' (expected I, IIA, IIB or III)");
}

std::string figure_label_mismatch(const FigureDiagram& d)
{
    for (const auto& l : d.labels) {
        const PicturePoint at{Rational(l.x), Rational(l.y)};
        if (picture_point(l.ray) != at)
            return "label " + to_string(l.ray) + " drawn at (" + std::to_string(l.x) + "," + std::to_string(l.y) +
                   ")";
    }
    return {};
}

std::string compare_with_figure(const Fan& fan, const FigureDiagram& d)
{
    std::vector<std::pair<PicturePoint, Ray>> points;
    for (const auto& r : fan.rays())
        points.emplace_back(picture_point(r), r);

    std::vector<std::pair<PicturePoint, PicturePoint>> fan_segments;
    for (const auto& e : fan.edges())
        fan_segments.emplace_back(picture_point(e.first), picture_point(e.second));

    std::vector<std::pair<PicturePoint, PicturePoint>> figure_segments;
    for (const auto& l : d.lines) {
        const PicturePoint a{Rational(l.x), Rational(l.y)};
        PicturePoint b;
        if (l.dx != 0) {
            const long s = l.dx > 0 ? 1 : -1;
            b = {Rational(l.x + s * l.length), Rational(l.y) + Rational(Integer(l.length * l.dy), Integer(std::abs(l.dx)))};
        } else {
            b = {Rational(l.x), Rational(l.y + (l.dy > 0 ? l.length : -l.length))};
        }
        figure_segments.emplace_back(a, b);
    }

    std::string error;
    const auto mine = elementary_segments(fan_segments, points, error);
    if (!error.empty())
        return "fan: " + error;
    const auto theirs = elementary_segments(figure_segments, points, error);
    if (!error.empty())
        return "figure " + d.step + ": " + error;
    for (const auto& e : mine)
        if (!theirs.count(e))
            return "segment " + render(e) + " is in the fan but not in figure " + d.step;
    for (const auto& e : theirs)
        if (!mine.count(e))
            return "segment " + render(e) + " is in figure " + d.step + " but not in the fan";

    const auto rays = fan.rays();
    for (const auto& l : d.labels)
        if (std::find(rays.begin(), rays.end(), l.ray) == rays.end())
            return "labelled point " + to_string(l.ray) + " is not a ray of the fan";
    return {};
}

const std::vector<std::string>& pipeline_step_names()
{
    static const std::vector<std::string> names{"I", "IIA", "IIB", "III"};
    return names;
}

std::vector<PipelineStep> resolution_pipeline(bool strict)
{
    const std::vector<Ray> step_one_rays{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}};
    const std::map<std::string, std::set<Ray>> expected_new{
        {"I", {step_one_rays.begin(), step_one_rays.end()}},
        {"IIA",
         {{2, 1, 2}, {1, 2, 2}, {2, 2, 1}, {4, 0, 1}, {1, 0, 4}, {0, 1, 4}, {0, 4, 1}, {1, 4, 0}, {4, 1, 0}}},
        {"IIB", {{3, 0, 2}, {2, 0, 3}, {0, 2, 3}, {0, 3, 2}, {2, 3, 0}, {3, 2, 0}}},
        {"III", {}},
    };

    std::vector<PipelineStep> steps;
    Fan previous = quotient_cone();
    for (const auto& name : pipeline_step_names()) {
        Fan next = previous;
        if (name == "I") {
            next = blowup(previous, {previous.support().rays});
        } else if (name == "IIA" || name == "IIB") {
            std::vector<std::vector<Ray>> center;
            for (const auto& e : singular_edges(previous))
                center.push_back({e.first, e.second});
            next = blowup(previous, center);
        } else {
            std::vector<std::vector<Ray>> center;
            for (const auto& r : step_one_rays)
                center.push_back({r});
            next = blowup(previous, center);
        }

        PipelineStep step;
        step.name = name;
        const auto old_rays = previous.rays();
        for (const auto& r : next.rays())
            if (!std::binary_search(old_rays.begin(), old_rays.end(), r))
                step.new_rays.push_back(r);

        auto check = [&step](const std::string& what, bool passed, std::string detail = {}) {
            step.checks.push_back({what, passed, std::move(detail)});
        };
        {
            std::string got;
            for (const auto& r : step.new_rays)
                got += to_string(r);
            const std::set<Ray> added(step.new_rays.begin(), step.new_rays.end());
            check("new_rays", added == expected_new.at(name), got.empty() ? "none" : got);
        }
        const std::string figure = compare_with_figure(next, figure_diagram(name));
        check("picture", figure.empty(), figure);
        const auto validity = check_fan(next);
        check("valid_fan", validity.ok(), validity.detail);
        check("refines_previous", refines(next, previous));
        check("crepant", verify_crepant(next));
        {
            const long v = static_cast<long>(next.rays().size());
            const long e = static_cast<long>(next.edges().size());
            const long f = cone_count(next);
            check("euler_characteristic", v - e + f == 1,
                  "V=" + std::to_string(v) + " E=" + std::to_string(e) + " F=" + std::to_string(f));
        }
        if (name == "I") {
            check("cones", cone_count(next) == 4, std::to_string(cone_count(next)));
        } else if (name == "IIA") {
            check("quadrilaterals", next.count_cones_with(4) == 6, std::to_string(next.count_cones_with(4)));
        } else if (name == "IIB") {
            check("quadrilaterals", next.count_cones_with(4) == 6, std::to_string(next.count_cones_with(4)));
            check("no_singular_edges", singular_edges(next).empty(),
                  std::to_string(singular_edges(next).size()));
        } else {
            check("diagonal_rule", next.canonical() == triangulate_through(previous, step_one_rays).canonical());
            check("simplicial", next.is_simplicial());
            check("smooth", verify_smooth(next));
            check("cones", cone_count(next) == 25, std::to_string(cone_count(next)));
            check("rays", next.rays().size() == 21, std::to_string(next.rays().size()));
        }
        step.fan = next;
        if (strict)
            for (const auto& c : step.checks)
                if (!c.passed)
                    throw Error(ErrorCode::CheckFailed, "step " + name + " " + c.name + ": " + c.detail);
        steps.push_back(std::move(step));
        previous = std::move(next);
    }
    return steps;
}

std::string slice_svg(const Fan& fan, const std::string& title)
{
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-10 -40 60 52\" width=\"600\" height=\"520\">\n";
    os << "<title>" << title << "</title>\n";
    os << "<g stroke=\"black\" stroke-width=\"0.15\" fill=\"none\">\n";
    for (const auto& e : fan.edges()) {
        const auto a = picture_point(e.first);
        const auto b = picture_point(e.second);
        os << "<line x1=\"" << svg_number(a.x) << "\" y1=\"" << svg_number(-a.y) << "\" x2=\"" << svg_number(b.x)
           << "\" y2=\"" << svg_number(-b.y) << "\"/>\n";
    }
    os << "</g>\n<g font-size=\"1.2\" font-family=\"sans-serif\">\n";
    for (const auto& r : fan.rays()) {
        const auto p = picture_point(r);
        os << "<circle cx=\"" << svg_number(p.x) << "\" cy=\"" << svg_number(-p.y) << "\" r=\"0.5\"/>\n";
        os << "<text x=\"" << svg_number(p.x + Rational(1)) << "\" y=\"" << svg_number(-p.y - Rational(1)) << "\">"
           << to_string(r) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace mirrorkit::toric
