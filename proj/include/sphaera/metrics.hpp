#pragma once

#include "sphaera/rational.hpp"
#include "sphaera/torus.hpp"

#include <string>

namespace sphaera {

enum class BoundKind { Lower, Upper };

struct BoundReport {
    double value = 0;
    BoundKind kind = BoundKind::Lower;
    std::string source;
};

// Lower bound on the bi-Lipschitz constant between tori of cone parameters a and b.
BoundReport angle_dilatation_bound(const Rational& a, const Rational& b);
// The same bound on the Lipschitz distance: |log(a/b)| / 2.
BoundReport angle_distance_bound(const Rational& a, const Rational& b);
BoundReport systole_distance_bound(double s1, double s2);
BoundReport lipschitz_lower_bound(const TorusRecord& t1, const TorusRecord& t2);
double injectivity_lower_bound(double sys, double v, const Rational& theta_min);
double mobius_dilatation(double t);

const char* to_string(BoundKind k);

}  // namespace sphaera
