#pragma once

#include "sphaera/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace sphaera {

// Angle parameters of a spherical triangle: the angle at vertex i is pi * theta[i].
// Indices are 0-based in the API and 1-based in printed output.
class AngleVector {
public:
    AngleVector(Rational t1, Rational t2, Rational t3);
    explicit AngleVector(const std::array<Rational, 3>& t) : AngleVector(t[0], t[1], t[2]) {}

    const Rational& operator[](int i) const { return t_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, 3>& values() const { return t_; }
    Rational sum() const { return t_[0] + t_[1] + t_[2]; }
    int integral_count() const;

    // result[k] = (*this)[perm[k]]
    AngleVector permuted(const std::array<int, 3>& perm) const;

    bool operator==(const AngleVector&) const = default;
    std::string str() const;

private:
    std::array<Rational, 3> t_;
};

AngleVector make_angles(std::string_view a, std::string_view b, std::string_view c);

enum class ExistenceTag { NoneExists, UniqueNonIntegral, FamilyOneIntegral, FamilyThreeIntegral };

struct ExistenceClass {
    ExistenceTag tag = ExistenceTag::NoneExists;
    // FamilyOneIntegral only
    int integral_index = -1;
    bool case_a = false;
    bool case_b = false;
    std::optional<Rational> theta;  // common fractional part of the two other angles
    // Digon counts. FamilyThreeIntegral always; FamilyOneIntegral when case (a)
    // holds and the decomposition has no negative entry.
    std::optional<std::array<long, 3>> n;

    bool exists() const { return tag != ExistenceTag::NoneExists; }
};

enum class BalanceTag { Strict, Semi, Unbalanced };

struct BalanceClass {
    BalanceTag tag = BalanceTag::Strict;
    int index = -1;  // dominant vertex for Semi / Unbalanced

    bool balanced() const { return tag != BalanceTag::Unbalanced; }
    bool operator==(const BalanceClass&) const = default;
};

Rational d1_to_even_lattice(const AngleVector& v);
Rational d1_to_multiples(const Rational& x, long k);

// Existence conditions for a triangle whose only integral angle is theta[i].
bool condition_a(const AngleVector& v, int i);
bool condition_b(const AngleVector& v, int i);

// Node admissibility in equality form: theta[i] = |theta[j]-theta[k]| + 2l + 1, l >= 0 integer.
bool node_condition(const AngleVector& v, int i);

ExistenceClass classify_existence(const AngleVector& v);
BalanceClass classify_balance(const AngleVector& v);

const char* to_string(ExistenceTag t);
const char* to_string(BalanceTag t);
std::string describe(const BalanceClass& b);

}  // namespace sphaera
