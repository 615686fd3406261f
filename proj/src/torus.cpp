#include "sphaera/torus.hpp"

#include "sphaera/errors.hpp"

#include <cmath>

namespace sphaera {

TorusRecord build_torus(const TriangleRecord& t, Orientation sign) {
    if (!t.existence.exists()) throw DomainError("triangle record does not exist");
    if (!t.balance.balanced()) throw DomainError("an unbalanced triangle does not glue to a torus");
    return TorusRecord{t, sign, {0, 1, 2}};
}

TorusVoronoi torus_voronoi(const TorusRecord& T) {
    switch (T.triangle.balance.tag) {
        case BalanceTag::Strict: return {VoronoiType::Trefoil, 2, 3, false};
        case BalanceTag::Semi: return {VoronoiType::Eight, 1, 2, true};
        case BalanceTag::Unbalanced: break;
    }
    throw DomainError("torus record carries an unbalanced triangle");
}

AutomorphismReport automorphism_group(const Rational& theta) {
    if (theta <= 1) throw DomainError("cone parameter must exceed 1");
    if (is_integer(theta) && is_odd(floor(theta)))
        throw DomainError("odd integral cone parameter " + to_string(theta) + " is handled by the odd-case routines");
    return AutomorphismReport{
        theta,
        d1_to_multiples(theta, 6) > 1,
        d1_to_multiples(theta, 4) > 1,
        AngleVector(theta / 3, theta / 3, theta / 3),
        AngleVector(theta / 2, theta / 4, theta / 4),
        2,
    };
}

EdgeMultipliers voronoi_edge_parity_check(const TorusRecord& T) {
    const TriangleRecord& t = T.triangle;
    if (t.existence.tag != ExistenceTag::FamilyThreeIntegral || !t.existence.n)
        throw DomainError("edge parity check needs a triangle with three integral angles");
    // T0 (all n = 0) has three Voronoi edges of length pi, one through each
    // side midpoint. Gluing n_i digon pairs along side i inserts a sphere that
    // is an n_i-fold branched cover; the bisector lifts to an arc of length
    // 2 pi n_i, so the edge crossing side i becomes (2 n_i + 1) pi.
    const auto& n = *t.existence.n;
    EdgeMultipliers out;
    out.multipliers = std::array<long, 3>{2 * n[0] + 1, 2 * n[1] + 1, 2 * n[2] + 1};
    for (long m : *out.multipliers) out.all_odd = out.all_odd && (m % 2 != 0);
    return out;
}

ProjectiveBounds projective_deformation_bounds(const TorusRecord& T, double t) {
    Rational theta = T.cone_parameter();
    if (!is_integer(theta) || is_even(floor(theta)))
        throw DomainError("projective deformations need an odd integral cone parameter");
    if (!std::isfinite(t)) throw DomainError("deformation parameter must be finite");
    double ch = std::cosh(t);
    return {std::log(ch), T.systole() / ch};
}

}  // namespace sphaera
