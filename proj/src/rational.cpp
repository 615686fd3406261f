#include "sphaera/rational.hpp"

#include "sphaera/errors.hpp"

#include <cctype>
#include <cmath>

namespace sphaera {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer floor(const Rational& x) {
    Integer n = numerator(x);
    Integer d = denominator(x);
    Integer q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

Integer ceil(const Rational& x) {
    Integer f = floor(x);
    return Rational(f) == x ? f : f + 1;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

bool is_odd(const Integer& n) { return boost::multiprecision::bit_test(boost::multiprecision::abs(n), 0); }

bool is_even(const Integer& n) { return !is_odd(n); }

long to_long(const Integer& n) {
    if (n > Integer(std::numeric_limits<long>::max()) || n < Integer(std::numeric_limits<long>::min()))
        throw DomainError("integer out of range: " + n.str());
    return n.convert_to<long>();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// cpp_int reads a leading 0 as octal, so strip those first.
Integer decimal_integer(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits)};
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
    return neg ? Integer(-decimal_integer(s)) : decimal_integer(s);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool looks_decimal(std::string_view s) {
    return s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
           s.find('E') != std::string_view::npos;
}

// Exact value of a decimal literal such as -1.25e-3.
Rational parse_decimal(std::string_view s) {
    std::string_view mant = s, expo;
    if (auto pos = s.find_first_of("eE"); pos != std::string_view::npos) {
        mant = s.substr(0, pos);
        expo = s.substr(pos + 1);
        if (expo.empty()) throw DomainError("bad exponent in '" + std::string(s) + "'");
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant.remove_prefix(1);
    }
    std::string_view ip = mant, fp;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        ip = mant.substr(0, dot);
        fp = mant.substr(dot + 1);
    }
    if (ip.empty() && fp.empty()) throw DomainError("not a number: '" + std::string(s) + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw DomainError("not a number: '" + std::string(s) + "'");
    std::string digits = std::string(ip) + std::string(fp);
    Integer num = digits.empty() ? Integer(0) : decimal_integer(digits);
    long e = -static_cast<long>(fp.size());
    if (!expo.empty()) {
        Integer ev = parse_integer(expo);
        if (ev > 1000 || ev < -1000) throw DomainError("exponent too large in '" + std::string(s) + "'");
        e += ev.convert_to<long>();
    }
    Integer p10 = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e < 0 ? -e : e));
    Rational r = e < 0 ? Rational(num, p10) : Rational(num * p10);
    return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw DomainError("empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer p = parse_integer(trim(s.substr(0, slash)));
        Integer q = parse_integer(trim(s.substr(slash + 1)));
        if (q == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    }
    if (looks_decimal(s)) return parse_decimal(s);
    return Rational(parse_integer(s));
}

Rational best_approximation(const Rational& x, const Integer& bound) {
    if (bound < 1) throw DomainError("denominator bound must be >= 1");
    if (denominator(x) <= bound) return x;
    // Convergents h/k plus the best semiconvergent at the end.
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational r = x;
    for (;;) {
        Integer a = floor(r);
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > bound) {
            Integer t = (bound - k0) / k1;
            Rational semi(t * h1 + h0, t * k1 + k0);
            Rational conv(h1, k1);
            return abs(semi - x) < abs(conv - x) ? semi : conv;
        }
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Rational rest = r - Rational(a);
        if (rest == 0) return Rational(h1, k1);
        r = 1 / rest;
    }
}

Rational snap_double(double x, const Integer& bound) {
    if (!std::isfinite(x)) throw DomainError("non-finite value");
    // A double is a dyadic rational; build it exactly and then approximate.
    int exp = 0;
    double m = std::frexp(x, &exp);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    Rational exact(mant);
    int shift = exp - 53;
    Integer two_pow = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(shift < 0 ? -shift : shift));
    exact = shift < 0 ? exact / Rational(two_pow) : exact * Rational(two_pow);
    return best_approximation(exact, bound);
}

SnapResult parse_snapped(std::string_view text, const Integer& bound) {
    SnapResult out;
    std::string_view s = trim(text);
    out.value = parse_rational(s);
    if (s.find('/') != std::string_view::npos || !looks_decimal(s)) return out;
    out.decimal = true;
    Rational snapped = best_approximation(out.value, bound);
    if (snapped != out.value) {
        out.snapped = true;
        out.note = "decimal " + std::string(s) + " snapped to " + to_string(snapped) +
                   " (denominator bound " + bound.str() + ")";
        out.value = snapped;
    } else {
        out.note = "decimal " + std::string(s) + " read as " + to_string(out.value);
    }
    return out;
}

}  // namespace sphaera
