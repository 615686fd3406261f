#include "sphaera/moduli.hpp"

#include "sphaera/errors.hpp"

#include <set>

namespace sphaera {

long genus_closed_form(long m) {
    long x = m * m - 6 * m + 12;  // always positive
    return x / 12;
}

ModuliTopology moduli_topology_nonodd(const Rational& theta) {
    ModuliTopology t;
    t.m = carpet_m(theta);
    t.theta = theta;
    t.genus = genus_closed_form(t.m);
    t.punctures = t.m;
    t.chi_orb = Rational(-t.m * t.m, 12);
    t.orbifold_points = {{4, d1_to_multiples(theta, 4) > 1 ? 1 : 0}, {6, d1_to_multiples(theta, 6) > 1 ? 1 : 0}};
    t.dimension = 2;
    t.components = 1;
    return t;
}

ChiReport chi_consistency(const Rational& theta) {
    ChiReport r;
    ModuliTopology t = moduli_topology_nonodd(theta);
    r.theta = theta;
    r.m = t.m;
    r.chi_ms = *t.chi_orb;
    r.chi_ms2 = Rational(-r.m * r.m, 2);
    r.chi_mt = build_doubled_complex(theta).euler_characteristic();

    r.ms2_is_half_mt = r.chi_ms2 == Rational(r.chi_mt, 2);
    r.ms2_is_six_ms = r.chi_ms2 == 6 * r.chi_ms;
    if (!r.ms2_is_half_mt)
        r.mismatches.push_back("chi(MS2) = " + to_string(r.chi_ms2) + " but chi(MT)/2 = " + to_string(Rational(r.chi_mt, 2)));
    if (!r.ms2_is_six_ms)
        r.mismatches.push_back("chi(MS2) = " + to_string(r.chi_ms2) + " but 6 chi(MS) = " + to_string(6 * r.chi_ms));

    // An orbifold point of order k contributes 1/k to chi_orb where the
    // underlying surface counts 1; generic points have order 2.
    r.epsilon = 0;
    for (const auto& p : t.orbifold_points)
        if (p.count > 0) r.epsilon += p.order == 4 ? Rational(1, 4) : Rational(1, 3);
    r.chi_top = 2 * (r.chi_ms + r.epsilon);
    r.genus_direct = 1 - (Rational(t.punctures) + r.chi_top) / 2;
    r.genus_closed = t.genus;
    r.genus_agrees = r.genus_direct == Rational(r.genus_closed);
    if (!r.genus_agrees)
        r.mismatches.push_back("theta = " + to_string(theta) + ": genus from chi_top is " + to_string(r.genus_direct) +
                               ", closed form gives " + std::to_string(r.genus_closed));
    return r;
}

OrbitCount a3_orbits(const std::vector<IntegralNode>& nodes) {
    std::set<std::array<long, 3>> seen;
    OrbitCount out;
    for (const auto& nd : nodes) {
        if (seen.count(nd.angles)) continue;
        std::array<long, 3> x = nd.angles;
        std::set<std::array<long, 3>> orbit;
        for (int r = 0; r < 3; ++r) {
            orbit.insert(x);
            x = {x[1], x[2], x[0]};
        }
        seen.insert(orbit.begin(), orbit.end());
        ++out.orbits;
        if (orbit.size() == 1) ++out.fixed;
    }
    return out;
}

ModuliTopology moduli_topology_odd(long m, bool sigma_invariant_only) {
    if (m < 1) throw DomainError("m must be positive");
    ModuliTopology t;
    t.m = m;
    t.genus = 0;
    t.punctures = 0;
    t.dimension = sigma_invariant_only ? 2 : 3;
    long nodes = m * (m + 1) / 2;
    t.components = (nodes + 2) / 3;  // ceil(m(m+1)/6)
    bool special = m % 3 == 1;
    t.orbifold_points = {{6, special ? 1 : 0}};
    const std::string plain = sigma_invariant_only ? "D" : "M";
    for (long k = 0; k < t.components; ++k)
        t.component_types.push_back(special && k == 0 ? plain + "'" : plain);
    return t;
}

MonodromyPredicates monodromy_predicates(const Rational& theta) {
    if (theta <= 1) throw DomainError("cone parameter must exceed 1");
    bool integral = is_integer(theta);
    bool odd = integral && is_odd(floor(theta));
    return {odd, integral && !odd};
}

}  // namespace sphaera
