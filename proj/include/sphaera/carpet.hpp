#pragma once

#include "sphaera/angles.hpp"
#include "sphaera/cell_complex.hpp"

#include <array>
#include <vector>

namespace sphaera {

using Point3 = std::array<Rational, 3>;

struct CarpetTriangle {
    std::array<long, 3> cube{};  // base corner of the unit cube holding the triangle
    bool odd_cube = false;       // parity of the base coordinate sum
    // vertex k is the one whose k-th coordinate is an integer; listed
    // counter-clockwise in the (theta1, theta2) projection
    std::array<Point3, 3> vertices;
    std::array<IdealLine, 3> edges;  // edge k is opposite vertex k
};

struct CarpetNode {
    Point3 point;
    int axis = 0;  // index of the integral coordinate
};

struct Carpet {
    Rational theta;
    long m = 0;
    Rational c;
    std::vector<CarpetTriangle> triangles;
    std::vector<CarpetNode> nodes;
};

struct CarpetCounts {
    long triangles = 0;
    long nodes = 0;
    long polygons = 0;        // E
    long internal_nodes = 0;  // N
    long strips = 0;
    long euler() const { return polygons - internal_nodes; }
};

struct PolygonSide {
    bool clip = false;  // on the semi-balanced boundary theta[axis] = theta/2
    IdealLine line;     // when !clip
    int clip_axis = -1;
};

// One item of the boundary cycle of a blown-up polygon.
struct BoundaryItem {
    enum class Kind { Ideal, Nodal, SemiBalanced };
    Kind kind = Kind::Ideal;
    IdealLine line;  // Ideal
    long index = -1; // internal node or semi-balanced arc id
};

struct BalancedPolygon {
    std::size_t triangle = 0;
    std::vector<Point3> vertices;     // counter-clockwise
    std::vector<PolygonSide> sides;   // sides[q] joins vertices[q] and vertices[q+1]
    std::vector<BoundaryItem> cycle;  // blown-up boundary, counter-clockwise
};

struct SemiBalancedArc {
    int axis = 0;
    Point3 from, to;  // equal when the arc is a boundary node (c = 0)
    std::size_t polygon = 0;
};

struct BalancedCarpet {
    Carpet carpet;
    std::vector<BalancedPolygon> polygons;
    std::vector<std::size_t> internal_nodes;  // indices into carpet.nodes
    std::vector<SemiBalancedArc> semi_balanced_arcs;
    std::vector<IdealLine> strips;
};

// m = floor((theta+1)/2), c = theta - 2m. Throws for odd integral theta.
long carpet_m(const Rational& theta);
CarpetCounts closed_form_counts(const Rational& theta);

Carpet enumerate_carpet(const Rational& theta);
BalancedCarpet enumerate_balanced_carpet(const Rational& theta);
CarpetCounts counts(const BalancedCarpet& b);

CellComplex build_blowup_complex(const Rational& theta);
CellComplex build_doubled_complex(const Rational& theta);
CellComplex build_blowup_complex(const BalancedCarpet& b);
CellComplex build_doubled_complex(const BalancedCarpet& b);

// Orbits of the S3 action permuting coordinates, applied to the punctures.
std::vector<std::vector<IdealLine>> s3_orbits_on_punctures(const CellComplex& complex);
IdealLine apply_permutation(const IdealLine& p, const std::array<int, 3>& perm);

struct IntegralNode {
    std::array<long, 3> angles{};  // positive, sum 2m+1, each <= m
    std::array<long, 3> n{};       // digon counts
    // parameter domain: arcs (l12, l23, l13) > 0 with sum 2*pi, an open 2-simplex
    int simplex_dimension = 2;
};

std::vector<IntegralNode> enumerate_integral_carpet(long m);

double polygon_area(const std::vector<Point3>& vertices);  // in the projection
Rational polygon_area_exact(const std::vector<Point3>& vertices);

}  // namespace sphaera
