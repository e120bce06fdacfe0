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

#ifndef MIRRORKIT_TORIC_HPP
#define MIRRORKIT_TORIC_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirrorkit/rational.hpp"

namespace mirrorkit::toric {

using Ray = std::array<long, 3>;
using Edge = std::pair<Ray, Ray>; // stored with first < second

std::string to_string(const Ray& r);

/// N = {n in Z^3 : n1 + n2 + n3 = 0 mod 5}, with basis (1,0,4), (0,1,4),
/// (0,0,5). Coordinates in that basis are (n1, n2, (n3 - 4 n1 - 4 n2)/5).
struct Lattice {
    static constexpr long kIndex = 5;

    static bool contains(const Ray& v);
    static std::array<Ray, 3> basis();
    /// Throws `InvalidArgument` for non-members.
    static Ray coordinates(const Ray& v);
    /// Primitive lattice generator of the ray through a nonzero integer vector.
    static Ray primitive(const Ray& v);
    static bool is_primitive(const Ray& v);
    /// Determinant of three members in lattice coordinates.
    static long determinant(const Ray& a, const Ray& b, const Ray& c);
    /// gcd of the 2x2 minors of two members in lattice coordinates; 1 iff
    /// the cone they span is smooth.
    static long edge_index(const Ray& a, const Ray& b);
};

/// Point of the slice n1 + n2 + n3 = 5 in picture coordinates:
/// x = 8 n3 + 4 n2, y = 6 n2.
struct PicturePoint {
    Rational x;
    Rational y;
    friend bool operator==(const PicturePoint&, const PicturePoint&) = default;
};

PicturePoint picture_point(const Ray& r);

/// A cone of the fan; 3-dimensional cones list their rays counterclockwise
/// around the slice polygon.
struct Cone {
    std::vector<Ray> rays;
    int dimension() const { return static_cast<int>(rays.size() < 3 ? rays.size() : 3); }
    bool is_simplicial() const { return rays.size() <= 3; }
    friend bool operator==(const Cone&, const Cone&) = default;
};

/// A complete subdivision of one 3-dimensional cone, stored by its maximal
/// cones. Lower-dimensional faces are derived.
class Fan {
public:
    /// The trivial fan of a single cone. Rays must be primitive lattice
    /// members spanning a 3-dimensional cone; they are reordered
    /// counterclockwise.
    static Fan single_cone(std::vector<Ray> rays);
    /// Rebuilds a fan from maximal cones, normalizing orientation.
    static Fan from_cones(const Cone& support, std::vector<Cone> cones);

    const Cone& support() const { return support_; }
    const std::vector<Cone>& cones() const { return cones_; }

    std::vector<Ray> rays() const;   // sorted
    std::vector<Edge> edges() const; // sorted
    /// Every face: rays, 2-dimensional cones and maximal cones.
    std::vector<Cone> faces() const;
    bool is_simplicial() const;
    int count_cones_with(std::size_t ray_count) const;
    /// Cones as sorted ray lists, sorted; equal for equal fans.
    std::vector<std::vector<Ray>> canonical() const;

private:
    Cone support_;
    std::vector<Cone> cones_;
};

/// The cone sigma spanned by (5,0,0), (0,5,0), (0,0,5).
Fan quotient_cone();

/// Standard star subdivision at each ray in turn. Rays must be lattice
/// members (`InvalidArgument`) inside the support (`RayOutsideSupport`).
Fan star_subdivide(const Fan& fan, std::span<const Ray> rays);

/// Normalized blowup of the reduced union of orbit closures V(tau) for the
/// listed faces tau. Each affected cone C is refined into the domains of
/// linearity of min_{m in I_C} <m, .>, where I_C is the monomial ideal of
/// the center in C. Ideal generators are enumerated with pairings in
/// [0, bound] against the first three rays of C.
Fan blowup(const Fan& fan, const std::vector<std::vector<Ray>>& center, int bound = 25);

/// 2-dimensional cones that are not smooth.
std::vector<Edge> singular_edges(const Fan& fan);

/// Splits every non-simplicial cone that contains exactly one of `apexes`
/// into triangles through that apex.
Fan triangulate_through(const Fan& fan, std::span<const Ray> apexes);

bool verify_smooth(const Fan& fan);
bool verify_crepant(const Fan& fan);
int cone_count(const Fan& fan);

struct FanValidity {
    bool members = false;        // all rays primitive lattice members
    bool oriented = false;       // every cone convex and counterclockwise
    bool support = false;        // slice areas add up to the support area
    bool face_to_face = false;   // interior edges shared by exactly two cones
    bool no_stray_rays = false;  // no ray inside another cone or edge
    std::string detail;
    bool ok() const { return members && oriented && support && face_to_face && no_stray_rays; }
};

FanValidity check_fan(const Fan& fan);
/// Every cone of `fine` lies inside some cone of `coarse`.
bool refines(const Fan& fine, const Fan& coarse);

/// One reference picture of the resolution, transcribed from its picture commands.
struct FigureDiagram {
    struct Line {
        long x, y, dx, dy, length;
    };
    struct Label {
        long x, y;
        Ray ray;
        bool corner;
    };
    std::string step;
    std::vector<Line> lines;
    std::vector<Label> labels;
};

/// Parses the fixture format: "step NAME", "line X Y DX DY LEN",
/// "corner X Y N1 N2 N3", "dot X Y N1 N2 N3"; '#' starts a comment.
FigureDiagram parse_figure(std::string_view text);
/// Built-in copy of the picture fixtures; step is "I", "IIA", "IIB" or "III".
FigureDiagram figure_diagram(const std::string& step);
/// Each label sits at the picture point of its lattice vector.
std::string figure_label_mismatch(const FigureDiagram& d);
/// Compares the slice of `fan` with a diagram: the sets of elementary
/// segments (split at every ray) must coincide and every label must be a
/// ray. Returns an empty string on a match, otherwise the first difference.
std::string compare_with_figure(const Fan& fan, const FigureDiagram& d);

struct StepCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PipelineStep {
    std::string name;
    Fan fan;
    std::vector<Ray> new_rays;
    std::vector<StepCheck> checks;
};

const std::vector<std::string>& pipeline_step_names();

/// Steps I, IIA, IIB, III. With `strict`, any deviation from the expected
/// ray sets, cell structure or reference picture throws `CheckFailed`; otherwise the
/// outcome is only recorded in each step's checks.
std::vector<PipelineStep> resolution_pipeline(bool strict = true);

/// SVG drawing of the slice in picture coordinates.
std::string slice_svg(const Fan& fan, const std::string& title);

} // namespace mirrorkit::toric

#endif // MIRRORKIT_TORIC_HPP
