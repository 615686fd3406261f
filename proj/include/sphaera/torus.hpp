#pragma once

#include "sphaera/triangles.hpp"

#include <array>
#include <optional>

namespace sphaera {

enum class Orientation { Positive, Negative };

// A torus with one conical point, given by the balanced triangle it is glued from.
struct TorusRecord {
    TriangleRecord triangle;
    Orientation orientation = Orientation::Positive;
    // marking[i] = vertex whose opposite side has midpoint p_i
    std::array<int, 3> marking{0, 1, 2};

    Rational cone_parameter() const { return triangle.angles.sum(); }  // cone angle / 2pi
    Rational area_over_pi() const { return 2 * (cone_parameter() - 1); }
    double cone_angle() const { return 2 * kPi * to_double(cone_parameter()); }
    double area() const { return kPi * to_double(area_over_pi()); }
    double systole() const { return triangle_systole(triangle); }
};

struct TorusVoronoi {
    VoronoiType tag = VoronoiType::Trefoil;
    int vertices = 2;
    int edges = 3;
    bool has_rectangular_involution = false;
};

struct AutomorphismReport {
    Rational theta;
    bool z6_exists = false;
    bool z4_exists = false;
    AngleVector z6_witness;
    AngleVector z4_witness;
    int generic_order = 2;
};

struct EdgeMultipliers {
    bool all_odd = true;
    std::optional<std::array<long, 3>> multipliers;  // edge length / pi, per triangle side
};

struct ProjectiveBounds {
    double lipschitz_distance_upper = 0;
    double systole_lower = 0;
};

TorusRecord build_torus(const TriangleRecord& t, Orientation sign);
TorusVoronoi torus_voronoi(const TorusRecord& T);
AutomorphismReport automorphism_group(const Rational& theta);
EdgeMultipliers voronoi_edge_parity_check(const TorusRecord& T);
ProjectiveBounds projective_deformation_bounds(const TorusRecord& T, double t);

}  // namespace sphaera
