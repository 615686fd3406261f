#include "sphaera/carpet.hpp"
#include "sphaera/errors.hpp"
#include "sphaera/moduli.hpp"

#include <doctest.h>

using namespace sphaera;

TEST_CASE("genus closed form") {
    const long expected[] = {0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7, 8};
    for (long m = 1; m <= 13; ++m) CHECK(genus_closed_form(m) == expected[m - 1]);
}

TEST_CASE("moduli topology away from odd integers") {
    ModuliTopology two = moduli_topology_nonodd(Rational(2));
    CHECK(two.m == 1);
    CHECK(two.genus == 0);
    CHECK(two.punctures == 1);
    CHECK(*two.chi_orb == Rational(-1, 12));
    CHECK(two.orbifold_points == std::vector<OrbifoldPoint>{{4, 1}, {6, 1}});

    ModuliTopology six = moduli_topology_nonodd(Rational(6));
    CHECK(six.m == 3);
    CHECK(six.orbifold_points == std::vector<OrbifoldPoint>{{4, 1}, {6, 0}});

    ModuliTopology big = moduli_topology_nonodd(Rational(29, 2));
    CHECK(big.m == 7);
    CHECK(big.genus == 1);
    CHECK(big.punctures == 7);
    CHECK_THROWS_AS(moduli_topology_nonodd(Rational(7)), DomainError);
}

TEST_CASE("Euler characteristics agree") {
    for (long p = 3; p <= 48; ++p) {
        Rational theta(p, 2);
        if (is_integer(theta) && is_odd(floor(theta))) continue;
        ChiReport r = chi_consistency(theta);
        CAPTURE(to_string(theta));
        CHECK(r.ms2_is_half_mt);
        CHECK(r.ms2_is_six_ms);
        CHECK(r.genus_agrees);
        CHECK(r.ok());
        CHECK(r.chi_mt == -r.m * r.m);
    }
    for (Rational theta : {Rational(11, 3), Rational(31, 7), Rational(47, 10)}) CHECK(chi_consistency(theta).ok());
}

TEST_CASE("odd integral moduli") {
    ModuliTopology one = moduli_topology_odd(1, true);
    CHECK(one.components == 1);
    CHECK(one.component_types == std::vector<std::string>{"D'"});
    CHECK(one.dimension == 2);

    ModuliTopology two = moduli_topology_odd(2, false);
    CHECK(two.components == 1);
    CHECK(two.component_types == std::vector<std::string>{"M"});
    CHECK(two.dimension == 3);

    for (long m = 1; m <= 12; ++m) {
        ModuliTopology t = moduli_topology_odd(m, true);
        OrbitCount o = a3_orbits(enumerate_integral_carpet(m));
        CAPTURE(m);
        CHECK(t.components == o.orbits);
        CHECK((o.fixed == 1) == (m % 3 == 1));
        CHECK(static_cast<long>(t.component_types.size()) == t.components);
    }
    CHECK_THROWS_AS(moduli_topology_odd(0, true), DomainError);
}

TEST_CASE("monodromy predicates") {
    CHECK(monodromy_predicates(Rational(3)).coaxial);
    CHECK_FALSE(monodromy_predicates(Rational(3)).klein);
    CHECK(monodromy_predicates(Rational(4)).klein);
    MonodromyPredicates h = monodromy_predicates(Rational(7, 2));
    CHECK_FALSE(h.coaxial);
    CHECK_FALSE(h.klein);
}
