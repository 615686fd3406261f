#include "sphaera/metrics.hpp"

#include "sphaera/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sphaera {

namespace {

void require_positive(const Rational& x, const char* what) {
    if (x <= 0) throw DomainError(std::string(what) + " must be positive");
}

void require_positive(double x, const char* what) {
    if (!(x > 0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be positive and finite");
}

}  // namespace

BoundReport angle_dilatation_bound(const Rational& a, const Rational& b) {
    require_positive(a, "cone parameter");
    require_positive(b, "cone parameter");
    Rational r = a > b ? a / b : b / a;
    return {std::sqrt(to_double(r)), BoundKind::Lower, "angle-continuity"};
}

BoundReport angle_distance_bound(const Rational& a, const Rational& b) {
    require_positive(a, "cone parameter");
    require_positive(b, "cone parameter");
    Rational r = a > b ? a / b : b / a;
    return {0.5 * std::log(to_double(r)), BoundKind::Lower, "angle-continuity"};
}

BoundReport systole_distance_bound(double s1, double s2) {
    require_positive(s1, "systole");
    require_positive(s2, "systole");
    return {std::abs(std::log(s1 / s2)), BoundKind::Lower, "systole-continuity"};
}

BoundReport lipschitz_lower_bound(const TorusRecord& t1, const TorusRecord& t2) {
    BoundReport angle = angle_distance_bound(t1.cone_parameter(), t2.cone_parameter());
    BoundReport sys = systole_distance_bound(t1.systole(), t2.systole());
    BoundReport out = angle.value >= sys.value ? angle : sys;
    out.source = "max(" + angle.source + ", " + sys.source + ") = " + out.source;
    return out;
}

double injectivity_lower_bound(double sys, double v, const Rational& theta_min) {
    require_positive(sys, "systole");
    require_positive(v, "Voronoi distance");
    require_positive(theta_min, "minimal angle");
    return std::min({sys, v, to_double(theta_min) * v});
}

double mobius_dilatation(double t) {
    if (!std::isfinite(t)) throw DomainError("deformation parameter must be finite");
    return std::cosh(t);
}

const char* to_string(BoundKind k) { return k == BoundKind::Lower ? "lower" : "upper"; }

}  // namespace sphaera
