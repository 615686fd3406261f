#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sphaera {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);
Rational abs(const Rational& x);
Rational frac(const Rational& x);  // x - floor(x), in [0,1)
bool is_odd(const Integer& n);
bool is_even(const Integer& n);

long to_long(const Integer& n);
double to_double(const Rational& x);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& x);

// Parses "p/q", "p" or an exact decimal "1.25". No snapping happens here.
Rational parse_rational(std::string_view text);

// Best approximation with denominator <= bound (continued fractions).
Rational best_approximation(const Rational& x, const Integer& bound);
Rational snap_double(double x, const Integer& bound);

struct SnapResult {
    Rational value;
    bool decimal = false;  // the text was a decimal, not p/q
    bool snapped = false;  // value differs from the exact decimal
    std::string note;
};

// Parses user input. Decimals are accepted and reported; if the exact
// decimal needs a denominator above `bound` it is snapped.
SnapResult parse_snapped(std::string_view text, const Integer& bound);

}  // namespace sphaera
