#include "sphaera/angles.hpp"

#include "sphaera/errors.hpp"

namespace sphaera {

AngleVector::AngleVector(Rational t1, Rational t2, Rational t3) : t_{std::move(t1), std::move(t2), std::move(t3)} {
    for (const auto& t : t_)
        if (t <= 0) throw DomainError("angle parameters must be positive, got " + to_string(t));
}

int AngleVector::integral_count() const {
    int k = 0;
    for (const auto& t : t_) k += is_integer(t) ? 1 : 0;
    return k;
}

AngleVector AngleVector::permuted(const std::array<int, 3>& perm) const {
    return AngleVector((*this)[perm[0]], (*this)[perm[1]], (*this)[perm[2]]);
}

std::string AngleVector::str() const {
    return "(" + to_string(t_[0]) + ", " + to_string(t_[1]) + ", " + to_string(t_[2]) + ")";
}

AngleVector make_angles(std::string_view a, std::string_view b, std::string_view c) {
    return AngleVector(parse_rational(a), parse_rational(b), parse_rational(c));
}

Rational d1_to_even_lattice(const AngleVector& v) {
    // Candidates floor-1 .. ceil+1 per coordinate; precompute the distances.
    std::array<std::array<Integer, 4>, 3> cand;
    std::array<std::array<Rational, 4>, 3> dist;
    std::array<int, 3> count{};
    for (int i = 0; i < 3; ++i) {
        Integer lo = floor(v[i]) - 1, hi = ceil(v[i]) + 1;
        int k = 0;
        for (Integer n = lo; n <= hi; ++n, ++k) {
            cand[i][k] = n;
            dist[i][k] = abs(v[i] - Rational(n));
        }
        count[i] = k;
    }
    std::optional<Rational> best;
    for (int a = 0; a < count[0]; ++a)
        for (int b = 0; b < count[1]; ++b)
            for (int c = 0; c < count[2]; ++c) {
                if (is_odd(cand[0][a] + cand[1][b] + cand[2][c])) continue;
                Rational d = dist[0][a] + dist[1][b] + dist[2][c];
                if (!best || d < *best) best = d;
            }
    return *best;
}

Rational d1_to_multiples(const Rational& x, long k) {
    if (k <= 0) throw DomainError("d1_to_multiples needs a positive modulus");
    Rational q = x / Rational(k);
    Integer j = floor(q);
    Rational lo = abs(x - Rational(j * k));
    Rational hi = abs(x - Rational((j + 1) * k));
    return lo < hi ? lo : hi;
}

namespace {

void others(int i, int& j, int& k) {
    j = (i + 1) % 3;
    k = (i + 2) % 3;
}

bool opposite_parity_bounded(const Rational& x, const Rational& ti) {
    if (!is_integer(x)) return false;
    Integer n = floor(x), t = floor(ti);
    return is_odd(n) != is_odd(t) && n <= t - 1;
}

}  // namespace

bool condition_a(const AngleVector& v, int i) {
    int j, k;
    others(i, j, k);
    return is_integer(v[i]) && opposite_parity_bounded(abs(v[j] - v[k]), v[i]);
}

bool condition_b(const AngleVector& v, int i) {
    int j, k;
    others(i, j, k);
    return is_integer(v[i]) && opposite_parity_bounded(v[j] + v[k], v[i]);
}

bool node_condition(const AngleVector& v, int i) {
    int j, k;
    others(i, j, k);
    if (!is_integer(v[i])) return false;
    Rational rest = v[i] - abs(v[j] - v[k]) - 1;  // must be 2l with l >= 0
    if (rest < 0 || !is_integer(rest)) return false;
    return is_even(floor(rest));
}

ExistenceClass classify_existence(const AngleVector& v) {
    ExistenceClass out;
    int ints = v.integral_count();
    if (ints == 0) {
        if (d1_to_even_lattice(v) > 1) out.tag = ExistenceTag::UniqueNonIntegral;
        return out;
    }
    if (ints == 2) return out;
    if (ints == 3) {
        std::array<Integer, 3> m{floor(v[0]), floor(v[1]), floor(v[2])};
        std::array<long, 3> n{};
        for (int i = 0; i < 3; ++i) {
            int j, k;
            others(i, j, k);
            Integer twice = m[j] + m[k] - m[i] - 1;
            if (twice < 0 || is_odd(twice)) return out;
            n[i] = to_long(twice / 2);
        }
        out.tag = ExistenceTag::FamilyThreeIntegral;
        out.n = n;
        return out;
    }
    int i = 0;
    while (!is_integer(v[i])) ++i;
    int j, k;
    others(i, j, k);
    out.case_a = condition_a(v, i);
    out.case_b = condition_b(v, i);
    if (!out.case_a && !out.case_b) return out;
    out.tag = ExistenceTag::FamilyOneIntegral;
    out.integral_index = i;
    out.theta = frac(v[j]);
    if (out.case_a) {
        Integer fj = floor(v[j]), fk = floor(v[k]), ti = floor(v[i]);
        Integer total = (fj + fk + ti - 1) / 2;
        std::array<Integer, 3> n;
        n[i] = total - (ti - 1);
        n[j] = total - fj;
        n[k] = total - fk;
        if (n[0] >= 0 && n[1] >= 0 && n[2] >= 0) out.n = std::array<long, 3>{to_long(n[0]), to_long(n[1]), to_long(n[2])};
    }
    return out;
}

BalanceClass classify_balance(const AngleVector& v) {
    for (int i = 0; i < 3; ++i) {
        int j, k;
        others(i, j, k);
        Rational rest = v[j] + v[k];
        if (v[i] == rest) return {BalanceTag::Semi, i};
        if (v[i] > rest) return {BalanceTag::Unbalanced, i};
    }
    return {BalanceTag::Strict, -1};
}

const char* to_string(ExistenceTag t) {
    switch (t) {
        case ExistenceTag::NoneExists: return "NoneExists";
        case ExistenceTag::UniqueNonIntegral: return "UniqueNonIntegral";
        case ExistenceTag::FamilyOneIntegral: return "FamilyOneIntegral";
        case ExistenceTag::FamilyThreeIntegral: return "FamilyThreeIntegral";
    }
    return "?";
}

const char* to_string(BalanceTag t) {
    switch (t) {
        case BalanceTag::Strict: return "Strict";
        case BalanceTag::Semi: return "Semi";
        case BalanceTag::Unbalanced: return "Unbalanced";
    }
    return "?";
}

std::string describe(const BalanceClass& b) {
    if (b.tag == BalanceTag::Strict) return "Strict";
    return std::string(to_string(b.tag)) + "(" + std::to_string(b.index + 1) + ")";
}

}  // namespace sphaera
