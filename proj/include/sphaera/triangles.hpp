#pragma once

#include "sphaera/angles.hpp"

#include <array>
#include <optional>

namespace sphaera {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTolerance = 1e-9;

enum class VoronoiType { Trefoil, Eight, Eyeglasses };
enum class CircumcenterKind { Interior, MidpointOppositeDominant, None };

struct Circumcenter {
    CircumcenterKind kind = CircumcenterKind::None;
    int index = -1;  // dominant vertex when the circumcenter is a side midpoint
};

// Sides are indexed by the opposite vertex.
struct TriangleRecord {
    AngleVector angles;
    ExistenceClass existence;
    BalanceClass balance;
    std::array<double, 3> reduced_sides{};
    std::optional<std::array<double, 3>> full_sides;  // integral families only
    std::optional<double> s;                          // one-integral family parameter
    std::optional<std::array<double, 3>> arcs;        // three-integral (l12, l23, l13)
    bool degenerate = false;                          // boundary of a family

    Rational area_over_pi() const { return angles.sum() - 1; }
};

std::array<double, 3> reduced_sides_nonintegral(const AngleVector& v, double tol = kDefaultTolerance);

TriangleRecord realize_nonintegral(const AngleVector& v, double tol = kDefaultTolerance);
TriangleRecord realize_three_integral(const std::array<long, 3>& n, const std::array<double, 3>& arcs,
                                      double tol = kDefaultTolerance);
TriangleRecord realize_one_integral(const AngleVector& v, double s, double tol = kDefaultTolerance);

// Inverse of realize_three_integral.
std::pair<std::array<long, 3>, std::array<double, 3>> recover_three_integral(const TriangleRecord& t);

Circumcenter circumcenter_class(const AngleVector& v);
VoronoiType voronoi_type_of_double(const AngleVector& v);
double triangle_systole(const TriangleRecord& t);

const char* to_string(VoronoiType t);
const char* to_string(CircumcenterKind k);

}  // namespace sphaera
