#include "sphaera/triangles.hpp"

#include "sphaera/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sphaera {

namespace {

// cos and sin of pi*t with t reduced mod 2 exactly first.
double cos_pi(const Rational& t) {
    Rational r = t - Rational(2 * floor(t / 2));
    return std::cos(kPi * to_double(r));
}

double sin_pi(const Rational& t) {
    Rational r = t - Rational(2 * floor(t / 2));
    return std::sin(kPi * to_double(r));
}

void require_existing(const AngleVector& v, const ExistenceClass& e) {
    if (!e.exists()) throw DomainError("no spherical triangle has angles pi*" + v.str());
}

}  // namespace

std::array<double, 3> reduced_sides_nonintegral(const AngleVector& v, double tol) {
    if (v.integral_count() != 0) throw DomainError("cosine formula needs non-integral angles, got " + v.str());
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double c = (cos_pi(v[i]) + cos_pi(v[j]) * cos_pi(v[k])) / (sin_pi(v[j]) * sin_pi(v[k]));
        if (!std::isfinite(c) || std::abs(c) > 1 + tol)
            throw DomainError("cosine of side out of range (" + std::to_string(c) + ") for " + v.str());
        out[static_cast<std::size_t>(i)] = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return out;
}

namespace {

TriangleRecord classified(const AngleVector& v) {
    return TriangleRecord{v, classify_existence(v), classify_balance(v), {}, std::nullopt, std::nullopt, std::nullopt, false};
}

}  // namespace

TriangleRecord realize_nonintegral(const AngleVector& v, double tol) {
    TriangleRecord t = classified(v);
    if (t.existence.tag != ExistenceTag::UniqueNonIntegral)
        throw DomainError(v.str() + " is not a unique non-integral triangle");
    t.reduced_sides = reduced_sides_nonintegral(v, tol);
    return t;
}

TriangleRecord realize_three_integral(const std::array<long, 3>& n, const std::array<double, 3>& arcs, double tol) {
    for (long x : n)
        if (x < 0) throw DomainError("digon counts must be non-negative");
    for (double a : arcs)
        if (!(a > 0) || !std::isfinite(a)) throw DomainError("arcs must be positive");
    if (std::abs(arcs[0] + arcs[1] + arcs[2] - 2 * kPi) > tol) throw DomainError("arcs must sum to 2*pi");
    AngleVector v(Rational(n[1] + n[2] + 1), Rational(n[2] + n[0] + 1), Rational(n[0] + n[1] + 1));
    TriangleRecord t = classified(v);
    require_existing(v, t.existence);
    // arcs are (l12, l23, l13); side x_i x_j is opposite vertex k.
    std::array<double, 3> full{};
    auto side = [&](int k, double l) { full[static_cast<std::size_t>(k)] = n[static_cast<std::size_t>(k)] % 2 == 0 ? l : 2 * kPi - l; };
    side(2, arcs[0]);
    side(0, arcs[1]);
    side(1, arcs[2]);
    t.full_sides = full;
    for (int k = 0; k < 3; ++k) t.reduced_sides[k] = std::min(full[k], 2 * kPi - full[k]);
    t.arcs = arcs;
    t.degenerate = *std::min_element(arcs.begin(), arcs.end()) < tol;
    return t;
}

std::pair<std::array<long, 3>, std::array<double, 3>> recover_three_integral(const TriangleRecord& t) {
    if (t.existence.tag != ExistenceTag::FamilyThreeIntegral || !t.arcs)
        throw DomainError("record is not a three-integral realization");
    return {*t.existence.n, *t.arcs};
}

TriangleRecord realize_one_integral(const AngleVector& v, double s, double tol) {
    if (!(s > 0 && s < kPi)) throw DomainError("family parameter s must lie in (0, pi)");
    TriangleRecord t = classified(v);
    if (t.existence.tag != ExistenceTag::FamilyOneIntegral || !t.existence.case_a)
        throw DomainError(v.str() + " is not in a one-integral family of type (a)");
    if (!t.balance.balanced()) throw DomainError(v.str() + " is unbalanced");
    if (!t.existence.n) throw InvariantViolation("balanced one-integral triangle without digon decomposition: " + v.str());
    const auto& n = *t.existence.n;
    int i = t.existence.integral_index, j = (i + 1) % 3, k = (i + 2) % 3;
    // Middle triangle x_i x_j x_k: |x_j x_k| = pi, sides at x_i are s and pi - s.
    // An odd number of digons on a side turns its length l into 2pi - l.
    std::array<double, 3> full{};
    full[i] = kPi;
    full[k] = n[k] % 2 == 0 ? s : 2 * kPi - s;
    full[j] = n[j] % 2 == 0 ? kPi - s : kPi + s;
    t.full_sides = full;
    for (int q = 0; q < 3; ++q) t.reduced_sides[q] = std::min(full[q], 2 * kPi - full[q]);
    t.s = s;
    t.degenerate = std::min(s, kPi - s) < tol;
    return t;
}

Circumcenter circumcenter_class(const AngleVector& v) {
    require_existing(v, classify_existence(v));
    BalanceClass b = classify_balance(v);
    switch (b.tag) {
        case BalanceTag::Strict: return {CircumcenterKind::Interior, -1};
        case BalanceTag::Semi: return {CircumcenterKind::MidpointOppositeDominant, b.index};
        case BalanceTag::Unbalanced: break;
    }
    return {CircumcenterKind::None, -1};
}

VoronoiType voronoi_type_of_double(const AngleVector& v) {
    require_existing(v, classify_existence(v));
    switch (classify_balance(v).tag) {
        case BalanceTag::Strict: return VoronoiType::Trefoil;
        case BalanceTag::Semi: return VoronoiType::Eight;
        case BalanceTag::Unbalanced: break;
    }
    return VoronoiType::Eyeglasses;
}

double triangle_systole(const TriangleRecord& t) {
    if (!t.balance.balanced()) throw DomainError("systole formula needs a balanced triangle");
    return 0.5 * *std::min_element(t.reduced_sides.begin(), t.reduced_sides.end());
}

const char* to_string(VoronoiType t) {
    switch (t) {
        case VoronoiType::Trefoil: return "Trefoil";
        case VoronoiType::Eight: return "Eight";
        case VoronoiType::Eyeglasses: return "Eyeglasses";
    }
    return "?";
}

const char* to_string(CircumcenterKind k) {
    switch (k) {
        case CircumcenterKind::Interior: return "Interior";
        case CircumcenterKind::MidpointOppositeDominant: return "MidpointOppositeDominant";
        case CircumcenterKind::None: return "None";
    }
    return "?";
}

}  // namespace sphaera
