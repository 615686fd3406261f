#include "oracles.hpp"
#include "sphaera/angles.hpp"
#include "sphaera/errors.hpp"

#include <doctest.h>

#include <random>

using namespace sphaera;

namespace {
AngleVector A(const char* a, const char* b, const char* c) { return make_angles(a, b, c); }
}  // namespace

TEST_CASE("angle vectors reject non-positive entries") {
    CHECK_THROWS_AS(A("0", "1", "1"), DomainError);
    CHECK_THROWS_AS(A("-1/2", "1", "1"), DomainError);
    CHECK(A("1", "1/2", "3/2").integral_count() == 1);
}

TEST_CASE("d1 to the even lattice") {
    CHECK(d1_to_even_lattice(A("1/2", "1/2", "1/2")) == Rational(3, 2));
    CHECK(d1_to_even_lattice(A("1", "1", "1")) == 1);
    CHECK(d1_to_even_lattice(A("23/10", "1/5", "1/5")) == Rational(7, 10));
    // agrees with the wide-box oracle
    for (auto v : {A("1/2", "1/2", "1/2"), A("23/10", "1/5", "1/5"), A("7/3", "5/4", "9/7")}) {
        oracle::Scaled s = oracle::scale(v);
        CHECK(d1_to_even_lattice(v) == Rational(oracle::d1_even_scaled(s), s.d));
    }
}

TEST_CASE("d1 is invariant under permutations and even translations") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(1, 60), den(1, 12), shift(-2, 2);
    for (int trial = 0; trial < 300; ++trial) {
        AngleVector v(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        Rational d = d1_to_even_lattice(v);
        CHECK(d1_to_even_lattice(v.permuted({2, 0, 1})) == d);
        CHECK(d1_to_even_lattice(v.permuted({1, 0, 2})) == d);
        int a = shift(rng), b = shift(rng), c = shift(rng);
        if ((a + b + c) % 2 != 0) c += 1;
        Rational ta = v[0] + 10 + a, tb = v[1] + 10 + b, tc = v[2] + 10 + c;  // stay positive
        CHECK(d1_to_even_lattice(AngleVector(ta, tb, tc)) == d1_to_even_lattice(AngleVector(v[0] + 10, v[1] + 10, v[2] + 10)));
    }
}

TEST_CASE("d1 to multiples") {
    CHECK(d1_to_multiples(Rational(2), 6) == 2);
    CHECK(d1_to_multiples(Rational(7), 6) == 1);
    CHECK(d1_to_multiples(Rational(7, 2), 4) == Rational(1, 2));
    CHECK_THROWS_AS(d1_to_multiples(Rational(1), 0), DomainError);
}

TEST_CASE("classify existence: worked examples") {
    CHECK(classify_existence(A("1/2", "1/2", "1/2")).tag == ExistenceTag::UniqueNonIntegral);

    ExistenceClass e = classify_existence(A("1", "1/2", "1/2"));
    CHECK(e.tag == ExistenceTag::FamilyOneIntegral);
    CHECK(e.case_a);
    CHECK(e.integral_index == 0);
    REQUIRE(e.n);
    CHECK(*e.n == std::array<long, 3>{0, 0, 0});
    CHECK(*e.theta == Rational(1, 2));

    ExistenceClass t = classify_existence(A("2", "2", "1"));
    CHECK(t.tag == ExistenceTag::FamilyThreeIntegral);
    CHECK(*t.n == std::array<long, 3>{0, 0, 1});

    CHECK(classify_existence(A("23/10", "1/5", "1/5")).tag == ExistenceTag::NoneExists);
    CHECK(classify_existence(A("1", "2", "1/2")).tag == ExistenceTag::NoneExists);  // two integral
    CHECK(classify_existence(A("1", "1", "2")).tag == ExistenceTag::NoneExists);    // even sum
}

TEST_CASE("one-integral decomposition reproduces the angles") {
    for (auto v : {A("2", "3/2", "1/2"), A("3", "9/4", "1/4"), A("4", "9/5", "14/5"), A("1", "5/4", "5/4")}) {
        ExistenceClass e = classify_existence(v);
        REQUIRE(e.tag == ExistenceTag::FamilyOneIntegral);
        REQUIRE(e.case_a);
        REQUIRE(e.n);
        int i = e.integral_index, j = (i + 1) % 3, k = (i + 2) % 3;
        const auto& n = *e.n;
        CHECK(v[i] == Rational(n[j] + n[k] + 1));
        CHECK(v[j] == Rational(n[i] + n[k]) + *e.theta);
        CHECK(v[k] == Rational(n[i] + n[j]) + *e.theta);
    }
}

TEST_CASE("branches (a) and (b) exclude each other") {
    // x+1/2 and y+1/2 have difference and sum of opposite parities
    int b_only = 0;
    for (int m = 1; m <= 7; ++m)
        for (int p = 1; p <= 30; ++p)
            for (int q = 1; q <= 30; ++q) {
                AngleVector v(Rational(m), Rational(p, 2), Rational(q, 2));
                ExistenceClass e = classify_existence(v);
                CHECK_FALSE((e.case_a && e.case_b));
                if (e.case_b) {
                    ++b_only;
                    CHECK_FALSE(classify_balance(v).balanced());
                }
            }
    CHECK(b_only > 0);
}

TEST_CASE("condition (a) and the equality form of node admissibility agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ints(1, 9), num(1, 40), den(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        AngleVector v(Rational(ints(rng)), a, b);
        CHECK(condition_a(v, 0) == node_condition(v, 0));
    }
}

TEST_CASE("classify balance") {
    CHECK(classify_balance(A("1", "1", "1")).tag == BalanceTag::Strict);
    BalanceClass s = classify_balance(A("1", "1/2", "1/2"));
    CHECK(s.tag == BalanceTag::Semi);
    CHECK(s.index == 0);
    BalanceClass u = classify_balance(A("2", "1/2", "1/2"));
    CHECK(u.tag == BalanceTag::Unbalanced);
    CHECK(u.index == 0);
    CHECK(classify_balance(A("1/2", "3", "1")).index == 1);
}

TEST_CASE("semi-balanced one-integral triangles have even sum and half-integral angles") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 24), den(1, 4);
    int hits = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        Rational b(num(rng), den(rng)), c(num(rng), den(rng));
        AngleVector v(b + c, b, c);
        if (v.integral_count() != 1 || !is_integer(v[0])) continue;
        if (!classify_existence(v).exists()) continue;
        ++hits;
        CHECK(is_integer(v.sum()));
        CHECK(is_even(floor(v.sum())));
        CHECK(denominator(v[1]) == 2);
        CHECK(denominator(v[2]) == 2);
    }
    CHECK(hits > 50);
}

TEST_CASE("existing integral triangles have odd sum and are strictly balanced") {
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int c = 1; c <= 8; ++c) {
                AngleVector v{Rational(a), Rational(b), Rational(c)};
                if (!classify_existence(v).exists()) continue;
                CHECK((a + b + c) % 2 == 1);
                CHECK(classify_balance(v).tag == BalanceTag::Strict);
            }
}

TEST_CASE("classify agrees with the oracle on a small exhaustive grid") {
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b)
            for (int c = 1; c <= 12; ++c) {
                AngleVector v(Rational(a, 4), Rational(b, 4), Rational(c, 4));
                ExistenceClass e = classify_existence(v);
                oracle::Result o = oracle::classify(v);
                CHECK(static_cast<int>(e.tag) == static_cast<int>(o.tag));
                if (o.tag == oracle::Tag::OneIntegral) {
                    CHECK(e.case_a == o.case_a);
                    CHECK(e.case_b == o.case_b);
                }
            }
}
