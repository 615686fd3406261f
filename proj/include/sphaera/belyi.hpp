#pragma once

#include "sphaera/angles.hpp"
#include "sphaera/cell_complex.hpp"
#include "sphaera/permutation.hpp"

#include <array>
#include <string>
#include <vector>

namespace sphaera {

// Colors 0, 1, 2 stand for the branch values 0, 1, infinity; strip index
// i = 1, 2, 3 maps to them in that order.
struct DessinVertex {
    int color = 0;
    long a = 0;  // strip E^{color+1}_a
    long ramification = 0;
    bool operator==(const DessinVertex&) const = default;
};

struct DessinEdge {
    std::array<std::size_t, 2> vertices{};
    std::array<std::size_t, 2> faces{};
    bool semi_balanced = false;
    int copy = 0;  // copy of a nodal edge
    bool operator==(const DessinEdge&) const = default;
};

struct DessinFace {
    std::array<std::size_t, 3> vertices{};  // by color
    std::array<std::size_t, 3> edges{};     // edges 0-1, 1-inf, inf-0
    int sign = 1;                           // +1 white, -1 black
    std::size_t polygon = 0;
    int copy = 1;
    bool operator==(const DessinFace&) const = default;
};

struct Sheet {
    std::size_t white = 0;
    std::size_t black = 0;  // across the 0-1 edge of the white face
    bool operator==(const Sheet&) const = default;
};

struct Dessin {
    long m = 0;
    std::vector<DessinVertex> vertices;
    std::vector<DessinEdge> edges;
    std::vector<DessinFace> faces;
    std::vector<Sheet> sheets;
    std::vector<std::vector<std::size_t>> rotation;  // faces counter-clockwise around each vertex
    Permutation sigma0, sigma1, sigma_inf;
    bool operator==(const Dessin&) const = default;

    long euler_characteristic() const {
        return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(faces.size());
    }
};

struct MonodromyTriple {
    Permutation sigma0, sigma1, sigma_inf;
};

struct BelyiReport {
    long m = 0;
    long degree = 0;
    long vertices = 0, edges = 0, faces = 0;
    long euler_characteristic = 0;
    std::array<std::vector<std::size_t>, 3> cycle_types;
    bool cycle_types_ok = false;
    bool product_identity = false;
    bool transitive = false;
    bool uniform_cycle_lengths = false;  // necessary for a Galois cover
    bool regular = false;                // Galois, by the centralizer test
    long genus_riemann_hurwitz = 0;
    long genus_expected = 0;
    bool ramification_ok = false;
    bool ok() const;
};

Dessin build_dessin(long m);
MonodromyTriple monodromy(const Dessin& d);
BelyiReport verify_belyi_invariants(long m);
bool dessin_membership(const AngleVector& v);

std::string export_dessin(const Dessin& d, const std::string& format);
Dessin dessin_from_json(const std::string& text);

}  // namespace sphaera
