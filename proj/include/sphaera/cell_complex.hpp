#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sphaera {

// The line theta[axis] = a + (c+1)/2 of a carpet; each one is an end
// (puncture) of the balanced-triangle space.
struct IdealLine {
    int axis = 0;
    long a = 0;
    auto operator<=>(const IdealLine&) const = default;
};

std::string to_string(const IdealLine& l);

// Faces are polygons of the balanced carpet (one copy, or the +/- copies).
// Boundary cycles alternate between edges and ideal sides; once capped, ideal
// sides become vertices.
struct CellComplex {
    enum class EdgeKind { Nodal, SemiBalanced };

    struct Edge {
        EdgeKind kind = EdgeKind::Nodal;
        long source = -1;  // internal node or arc id
        int copy = 0;      // +1/-1 for nodal edges of a double, 0 otherwise
        std::vector<std::size_t> faces;
        std::array<long, 2> ends{-1, -1};  // vertex ids, capped complexes only
    };

    struct Side {
        bool ideal = false;
        std::size_t edge = 0;  // when !ideal
        IdealLine line;        // when ideal
        long puncture = -1;    // when ideal
    };

    struct Face {
        std::size_t polygon = 0;
        int copy = 0;         // +1/-1 in a double, 0 in the bordered complex
        int orientation = 1;  // +1 when the surface orientation agrees with the plane
        std::vector<Side> boundary;  // counter-clockwise in the plane
    };

    std::vector<IdealLine> punctures;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    bool capped = false;  // punctures filled in by vertices

    long vertex_count() const { return capped ? static_cast<long>(punctures.size()) : 0; }
    long boundary_edges() const;
    long interior_edges() const { return static_cast<long>(edges.size()) - boundary_edges(); }
    // Boundary edges are free faces of their polygon and do not change the
    // homotopy type, so only interior edges are counted.
    long euler_characteristic() const {
        return vertex_count() - interior_edges() + static_cast<long>(faces.size());
    }
    // Genus of the closed surface obtained by filling all ends.
    long genus() const;
};

CellComplex cap(const CellComplex& c);

// Edge directions in the two faces of every interior edge are opposite.
bool orientation_consistent(const CellComplex& c);

}  // namespace sphaera
