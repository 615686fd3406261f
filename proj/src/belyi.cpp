#include "sphaera/belyi.hpp"

#include "sphaera/carpet.hpp"
#include "sphaera/errors.hpp"

#include <algorithm>
#include <map>

namespace sphaera {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

// slot of the edge joining colors c and d: {0,1} -> 0, {1,2} -> 1, {2,0} -> 2
std::size_t pair_slot(int c, int d) {
    if (c > d) std::swap(c, d);
    if (c == 0 && d == 1) return 0;
    if (c == 1 && d == 2) return 1;
    if (c == 0 && d == 2) return 2;
    throw InvariantViolation("edge joins two vertices of the same color");
}

// Edge of face f that enters its corner of color c, following the surface
// orientation. Planar order of the corners is 0 -> 1 -> 2.
std::size_t incoming_edge(const DessinFace& f, int c) {
    int prev = f.sign > 0 ? (c + 2) % 3 : (c + 1) % 3;
    return f.edges[pair_slot(prev, c)];
}

std::size_t outgoing_edge(const DessinFace& f, int c) {
    int next = f.sign > 0 ? (c + 1) % 3 : (c + 2) % 3;
    return f.edges[pair_slot(c, next)];
}

// Next face counter-clockwise around the corner of color c.
std::size_t turn(const Dessin& d, std::size_t f, int c) {
    std::size_t e = incoming_edge(d.faces[f], c);
    const auto& ef = d.edges[e].faces;
    std::size_t g = ef[0] == f ? ef[1] : ef[0];
    check(d.faces[g].sign == -d.faces[f].sign, "adjacent dessin faces have the same color");
    check(outgoing_edge(d.faces[g], c) == e, "rotation data is inconsistent with the orientation");
    check(d.faces[g].vertices[c] == d.faces[f].vertices[c], "rotation leaves its vertex");
    return g;
}

}  // namespace

Dessin build_dessin(long m) {
    if (m < 1) throw DomainError("m must be positive");
    BalancedCarpet bc = enumerate_balanced_carpet(Rational(2 * m));
    CellComplex cx = cap(build_doubled_complex(bc));

    Dessin d;
    d.m = m;
    for (const auto& p : cx.punctures) d.vertices.push_back({p.axis, p.a, 0});
    for (const auto& e : cx.edges) {
        check(e.faces.size() == 2, "dessin edge without two faces");
        DessinEdge de;
        de.vertices = {static_cast<std::size_t>(e.ends[0]), static_cast<std::size_t>(e.ends[1])};
        de.faces = {e.faces[0], e.faces[1]};
        de.semi_balanced = e.kind == CellComplex::EdgeKind::SemiBalanced;
        de.copy = e.copy;
        d.edges.push_back(de);
    }
    for (const auto& f : cx.faces) {
        check(f.boundary.size() == 6, "dessin face is not a triangle");
        DessinFace df;
        df.sign = f.orientation;
        df.polygon = f.polygon;
        df.copy = f.copy;
        std::array<bool, 3> seen{};
        for (std::size_t q = 0; q < 6; ++q) {
            const auto& s = f.boundary[q];
            if (s.ideal) {
                int c = cx.punctures[static_cast<std::size_t>(s.puncture)].axis;
                check(!seen[c], "dessin face has two corners of one color");
                seen[c] = true;
                df.vertices[c] = static_cast<std::size_t>(s.puncture);
            } else {
                const auto& before = f.boundary[(q + 5) % 6];
                const auto& after = f.boundary[(q + 1) % 6];
                int c0 = cx.punctures[static_cast<std::size_t>(before.puncture)].axis;
                int c1 = cx.punctures[static_cast<std::size_t>(after.puncture)].axis;
                check((c1 - c0 + 3) % 3 == 1, "face corners are not in the order 0, 1, infinity");
                df.edges[pair_slot(c0, c1)] = s.edge;
            }
        }
        d.faces.push_back(df);
    }

    // Rotation and ramification around each vertex.
    d.rotation.assign(d.vertices.size(), {});
    std::vector<long> corners(d.vertices.size(), 0);
    for (const auto& f : d.faces)
        for (std::size_t v : f.vertices) ++corners[v];
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        int c = d.vertices[v].color;
        std::size_t start = d.faces.size();
        for (std::size_t f = 0; f < d.faces.size() && start == d.faces.size(); ++f)
            if (d.faces[f].vertices[c] == v) start = f;
        check(start < d.faces.size(), "isolated dessin vertex");
        std::size_t f = start;
        do {
            d.rotation[v].push_back(f);
            f = turn(d, f, c);
        } while (f != start && d.rotation[v].size() <= d.faces.size());
        check(static_cast<long>(d.rotation[v].size()) == corners[v], "rotation does not visit every corner");
        check(corners[v] % 2 == 0, "odd number of faces around a dessin vertex");
        d.vertices[v].ramification = corners[v] / 2;
    }

    std::vector<long> sheet_of(d.faces.size(), -1);
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        if (d.faces[f].sign > 0) {
            const DessinEdge& e = d.edges[d.faces[f].edges[0]];
            std::size_t black = e.faces[0] == f ? e.faces[1] : e.faces[0];
            sheet_of[f] = static_cast<long>(d.sheets.size());
            d.sheets.push_back({f, black});
        }
    check(static_cast<long>(d.sheets.size()) == m * m, "number of sheets differs from m^2");

    MonodromyTriple mt = monodromy(d);
    d.sigma0 = mt.sigma0;
    d.sigma1 = mt.sigma1;
    d.sigma_inf = mt.sigma_inf;
    return d;
}

MonodromyTriple monodromy(const Dessin& d) {
    std::map<std::size_t, std::size_t> sheet_of;
    for (std::size_t s = 0; s < d.sheets.size(); ++s) {
        check(d.faces.at(d.sheets[s].white).sign > 0, "sheet with a black face");
        sheet_of[d.sheets[s].white] = s;
    }
    std::array<Permutation, 3> sigma;
    for (int c = 0; c < 3; ++c) {
        sigma[c].resize(d.sheets.size());
        for (std::size_t s = 0; s < d.sheets.size(); ++s) {
            std::size_t f = turn(d, turn(d, d.sheets[s].white, c), c);
            sigma[c][s] = sheet_of.at(f);
        }
        check(is_permutation(sigma[c]), "monodromy is not a permutation");
    }
    return {sigma[0], sigma[1], sigma[2]};
}

bool BelyiReport::ok() const {
    return degree == m * m && cycle_types_ok && product_identity && transitive && ramification_ok &&
           genus_riemann_hurwitz == genus_expected && euler_characteristic == 2 - 2 * genus_expected &&
           regular == (m == 1) && uniform_cycle_lengths == (m == 1);
}

BelyiReport verify_belyi_invariants(long m) {
    Dessin d = build_dessin(m);
    BelyiReport r;
    r.m = m;
    r.degree = static_cast<long>(d.sheets.size());
    r.vertices = static_cast<long>(d.vertices.size());
    r.edges = static_cast<long>(d.edges.size());
    r.faces = static_cast<long>(d.faces.size());
    r.euler_characteristic = d.euler_characteristic();
    const std::array<const Permutation*, 3> sig{&d.sigma0, &d.sigma1, &d.sigma_inf};
    std::vector<std::size_t> expected;
    for (long k = 1; k <= 2 * m - 1; k += 2) expected.push_back(static_cast<std::size_t>(k));
    r.cycle_types_ok = true;
    r.uniform_cycle_lengths = true;
    long ramification_total = 0;
    for (int c = 0; c < 3; ++c) {
        r.cycle_types[c] = cycle_type(*sig[c]);
        r.cycle_types_ok = r.cycle_types_ok && r.cycle_types[c] == expected;
        const auto& t = r.cycle_types[c];
        r.uniform_cycle_lengths = r.uniform_cycle_lengths && std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
        for (std::size_t len : t) ramification_total += static_cast<long>(len) - 1;
    }
    r.product_identity = is_identity(compose(d.sigma_inf, compose(d.sigma1, d.sigma0)));
    r.transitive = is_transitive({d.sigma0, d.sigma1, d.sigma_inf});
    r.regular = is_regular({d.sigma0, d.sigma1, d.sigma_inf});
    long chi = 2 * r.degree - ramification_total;
    r.genus_riemann_hurwitz = (2 - chi) / 2;
    r.genus_expected = (m - 1) * (m - 2) / 2;

    // ramification of each vertex equals a cycle of the matching color
    r.ramification_ok = true;
    for (int c = 0; c < 3; ++c) {
        std::vector<std::size_t> ram;
        for (const auto& v : d.vertices)
            if (v.color == c) ram.push_back(static_cast<std::size_t>(v.ramification));
        std::sort(ram.begin(), ram.end());
        r.ramification_ok = r.ramification_ok && ram == r.cycle_types[c];
    }
    return r;
}

bool dessin_membership(const AngleVector& v) {
    Rational sum = v.sum();
    if (!is_integer(sum) || is_odd(floor(sum)) || sum < 2)
        throw DomainError("dessin membership needs an even integral angle sum, got " + to_string(sum));
    BalanceClass b = classify_balance(v);
    if (!b.balanced()) throw DomainError(v.str() + " is not balanced");
    return v.integral_count() == 1 || b.tag == BalanceTag::Semi;
}

}  // namespace sphaera
