#pragma once

#include "sphaera/carpet.hpp"
#include "sphaera/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphaera {

struct OrbifoldPoint {
    int order = 2;
    int count = 0;
    bool operator==(const OrbifoldPoint&) const = default;
};

struct ModuliTopology {
    std::optional<Rational> theta;  // non-odd case
    long m = 0;
    long genus = 0;
    long punctures = 0;
    std::optional<Rational> chi_orb;  // non-odd case
    std::vector<OrbifoldPoint> orbifold_points;
    int generic_order = 2;
    int dimension = 2;
    long components = 1;
    std::vector<std::string> component_types;  // odd case
};

struct ChiReport {
    Rational theta;
    long m = 0;
    Rational chi_ms;        // -m^2/12
    Rational chi_ms2;       // -m^2/2
    long chi_mt = 0;        // from the doubled complex
    Rational epsilon;       // 1/4 and 1/3 from exceptional points
    Rational chi_top;       // underlying surface
    Rational genus_direct;  // 1 - (punctures + chi_top)/2
    long genus_closed = 0;  // floor((m^2 - 6m + 12)/12)
    bool ms2_is_half_mt = false;
    bool ms2_is_six_ms = false;
    bool genus_agrees = false;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

struct MonodromyPredicates {
    bool coaxial = false;
    bool klein = false;
};

long genus_closed_form(long m);
ModuliTopology moduli_topology_nonodd(const Rational& theta);
ChiReport chi_consistency(const Rational& theta);
ModuliTopology moduli_topology_odd(long m, bool sigma_invariant_only);
MonodromyPredicates monodromy_predicates(const Rational& theta);

struct OrbitCount {
    long orbits = 0;
    long fixed = 0;  // orbits of size one
};

// Orbits of the cyclic group A3 rotating the coordinates of integral nodes.
OrbitCount a3_orbits(const std::vector<IntegralNode>& nodes);

}  // namespace sphaera
