#include "sphaera/errors.hpp"
#include "sphaera/torus.hpp"

#include <doctest.h>

#include <cmath>

using namespace sphaera;

namespace {
AngleVector A(const char* a, const char* b, const char* c) { return make_angles(a, b, c); }
constexpr double pi = kPi;
}  // namespace

TEST_CASE("torus invariants") {
    TorusRecord oct = build_torus(realize_nonintegral(A("1/2", "1/2", "1/2")), Orientation::Positive);
    CHECK(oct.cone_angle() == doctest::Approx(3 * pi));
    CHECK(oct.area() == doctest::Approx(pi));
    CHECK(oct.systole() == triangle_systole(oct.triangle));

    TorusRecord integral = build_torus(realize_three_integral({0, 0, 0}, {2 * pi / 3, 2 * pi / 3, 2 * pi / 3}),
                                       Orientation::Negative);
    CHECK(integral.cone_angle() == doctest::Approx(6 * pi));
    CHECK(integral.area() == doctest::Approx(4 * pi));
    CHECK(torus_voronoi(integral).tag == VoronoiType::Trefoil);
    CHECK(torus_voronoi(integral).vertices == 2);
    CHECK(torus_voronoi(integral).edges == 3);

    TorusRecord semi = build_torus(realize_one_integral(A("1", "1/2", "1/2"), pi / 2), Orientation::Positive);
    TorusVoronoi v = torus_voronoi(semi);
    CHECK(v.tag == VoronoiType::Eight);
    CHECK(v.has_rectangular_involution);
    CHECK(v.vertices == 1);
    CHECK(v.edges == 2);

    CHECK_THROWS_AS(build_torus(realize_nonintegral(A("5/2", "1/2", "1/2")), Orientation::Positive), DomainError);
}

TEST_CASE("Voronoi shape depends only on the balance class") {
    for (auto v : {A("1/2", "1/2", "1/2"), A("3/4", "3/4", "3/4"), A("3/4", "4/5", "9/10")}) {
        TorusRecord T = build_torus(realize_nonintegral(v), Orientation::Positive);
        CHECK(torus_voronoi(T).tag == VoronoiType::Trefoil);
        CHECK_FALSE(torus_voronoi(T).has_rectangular_involution);
    }
}

TEST_CASE("automorphism groups") {
    AutomorphismReport two = automorphism_group(Rational(2));
    CHECK(two.z6_exists);
    CHECK(two.z4_exists);
    AutomorphismReport six = automorphism_group(Rational(6));
    CHECK_FALSE(six.z6_exists);
    CHECK(six.z4_exists);
    AutomorphismReport seven_halves = automorphism_group(Rational(7, 2));
    CHECK_FALSE(seven_halves.z4_exists);
    CHECK(seven_halves.z6_exists);
    CHECK_THROWS_AS(automorphism_group(Rational(5)), DomainError);
    CHECK_THROWS_AS(automorphism_group(Rational(1, 2)), DomainError);
}

TEST_CASE("automorphism witnesses exist exactly when the group does") {
    for (int p = 5; p <= 160; ++p) {
        Rational theta(p, 4);
        if (is_integer(theta) && is_odd(floor(theta))) continue;
        AutomorphismReport r = automorphism_group(theta);
        CHECK(classify_existence(r.z6_witness).exists() == r.z6_exists);
        // (theta/2, theta/4, theta/4) is semi-balanced; it lies in a family
        ExistenceClass e4 = classify_existence(r.z4_witness);
        CHECK(classify_balance(r.z4_witness).tag == BalanceTag::Semi);
        CHECK(e4.exists() == r.z4_exists);
    }
}

TEST_CASE("Voronoi edges of integral tori") {
    TorusRecord t0 = build_torus(realize_three_integral({0, 0, 0}, {2 * pi / 3, 2 * pi / 3, 2 * pi / 3}),
                                 Orientation::Positive);
    EdgeMultipliers e0 = voronoi_edge_parity_check(t0);
    CHECK(e0.all_odd);
    CHECK(*e0.multipliers == std::array<long, 3>{1, 1, 1});

    TorusRecord t1 = build_torus(realize_three_integral({1, 0, 0}, {pi / 2, pi / 2, pi}), Orientation::Positive);
    EdgeMultipliers e1 = voronoi_edge_parity_check(t1);
    CHECK(e1.all_odd);
    CHECK(*e1.multipliers == std::array<long, 3>{3, 1, 1});
    // total multiplier equals the cone parameter
    long sum = (*e1.multipliers)[0] + (*e1.multipliers)[1] + (*e1.multipliers)[2];
    CHECK(Rational(sum) == t1.cone_parameter());

    TorusRecord oct = build_torus(realize_nonintegral(A("1/2", "1/2", "1/2")), Orientation::Positive);
    CHECK_THROWS_AS(voronoi_edge_parity_check(oct), DomainError);
}

TEST_CASE("projective deformation bounds") {
    TorusRecord t = build_torus(realize_three_integral({0, 0, 0}, {2 * pi / 3, 2 * pi / 3, 2 * pi / 3}),
                                Orientation::Positive);
    ProjectiveBounds zero = projective_deformation_bounds(t, 0.0);
    CHECK(zero.lipschitz_distance_upper == 0.0);
    CHECK(zero.systole_lower == doctest::Approx(t.systole()));
    double t2 = std::acosh(2.0);
    ProjectiveBounds two = projective_deformation_bounds(t, t2);
    CHECK(two.lipschitz_distance_upper == doctest::Approx(std::log(2.0)));
    CHECK(two.systole_lower == doctest::Approx(t.systole() / 2));
    ProjectiveBounds neg = projective_deformation_bounds(t, -t2);
    CHECK(neg.lipschitz_distance_upper == two.lipschitz_distance_upper);
    CHECK(neg.systole_lower == two.systole_lower);

    TorusRecord even = build_torus(realize_one_integral(A("1", "1/2", "1/2"), 1.0), Orientation::Positive);
    CHECK_THROWS_AS(projective_deformation_bounds(even, 0.5), DomainError);
}
