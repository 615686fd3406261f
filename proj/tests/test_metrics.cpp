#include "sphaera/errors.hpp"
#include "sphaera/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace sphaera;

TEST_CASE("angle bounds") {
    BoundReport r = angle_dilatation_bound(Rational(2), Rational(8));
    CHECK(r.kind == BoundKind::Lower);
    CHECK(r.value == doctest::Approx(2.0));
    CHECK(angle_dilatation_bound(Rational(8), Rational(2)).value == r.value);
    CHECK(angle_dilatation_bound(Rational(5, 2), Rational(5, 2)).value == 1.0);
    CHECK(angle_distance_bound(Rational(2), Rational(8)).value == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(angle_dilatation_bound(Rational(0), Rational(2)), DomainError);
}

TEST_CASE("systole bound") {
    CHECK(systole_distance_bound(1.0, 2.0).value == doctest::Approx(std::log(2.0)));
    CHECK(systole_distance_bound(2.0, 1.0).value == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(systole_distance_bound(0.0, 1.0), DomainError);
}

TEST_CASE("combined Lipschitz lower bound") {
    TorusRecord a = build_torus(realize_nonintegral(make_angles("1/2", "1/2", "1/2")), Orientation::Positive);
    TorusRecord b = build_torus(realize_three_integral({0, 0, 0}, {2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}),
                                Orientation::Positive);
    BoundReport r = lipschitz_lower_bound(a, b);
    double ang = 0.5 * std::log(2.0);
    double sys = std::abs(std::log(a.systole() / b.systole()));
    CHECK(r.value == doctest::Approx(std::max(ang, sys)));
    CHECK(r.value >= 0);
    CHECK(lipschitz_lower_bound(a, a).value == 0.0);
}

TEST_CASE("injectivity radius and Mobius dilatation") {
    CHECK(injectivity_lower_bound(1.0, 2.0, Rational(1, 4)) == doctest::Approx(0.5));
    CHECK(injectivity_lower_bound(0.3, 2.0, Rational(1, 2)) == doctest::Approx(0.3));
    CHECK_THROWS_AS(injectivity_lower_bound(-1.0, 1.0, Rational(1)), DomainError);
    CHECK(mobius_dilatation(0.0) == 1.0);
    CHECK(mobius_dilatation(std::acosh(3.0)) == doctest::Approx(3.0));
}
