#include "sphaera/errors.hpp"
#include "sphaera/rational.hpp"

#include <doctest.h>

#include <cmath>

using namespace sphaera;

TEST_CASE("parse and print rationals") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/-4")) == "1/2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(to_string(parse_rational("1.25")) == "5/4");
    CHECK(to_string(parse_rational("-0.5")) == "-1/2");
    CHECK(to_string(parse_rational("2.5e-1")) == "1/4");
    CHECK(to_string(parse_rational(".5")) == "1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
}

TEST_CASE("floor, ceil and parity") {
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(ceil(Rational(4)) == 4);
    CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
    CHECK(is_odd(Integer(-3)));
    CHECK(is_even(Integer(0)));
    CHECK(is_integer(Rational(8, 4)));
}

TEST_CASE("best approximation and snapping") {
    CHECK(best_approximation(Rational(314159, 100000), Integer(10)) == Rational(22, 7));
    CHECK(best_approximation(Rational(3, 7), Integer(7)) == Rational(3, 7));
    CHECK(snap_double(0.1, Integer(1000)) == Rational(1, 10));
    CHECK(snap_double(1.0 / 3.0, Integer(1000000)) == Rational(1, 3));
    CHECK(snap_double(-2.75, Integer(100)) == Rational(-11, 4));

    SnapResult exact = parse_snapped("0.5", Integer(1000000));
    CHECK(exact.decimal);
    CHECK_FALSE(exact.snapped);
    CHECK(exact.value == Rational(1, 2));

    SnapResult snapped = parse_snapped("0.3333333333", Integer(1000));
    CHECK(snapped.snapped);
    CHECK(snapped.value == Rational(1, 3));
    CHECK(snapped.note.find("snapped") != std::string::npos);

    SnapResult plain = parse_snapped("7/2", Integer(1));
    CHECK_FALSE(plain.decimal);
    CHECK(plain.value == Rational(7, 2));
}
