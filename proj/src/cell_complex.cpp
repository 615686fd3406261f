#include "sphaera/cell_complex.hpp"

#include "sphaera/errors.hpp"

namespace sphaera {

std::string to_string(const IdealLine& l) { return "E" + std::to_string(l.axis + 1) + "_" + std::to_string(l.a); }

long CellComplex::boundary_edges() const {
    long k = 0;
    for (const auto& e : edges) k += e.faces.size() == 1 ? 1 : 0;
    return k;
}

long CellComplex::genus() const {
    if (boundary_edges() != 0) throw DomainError("genus is defined here only for complexes without boundary");
    long chi = euler_characteristic() + (capped ? 0 : static_cast<long>(punctures.size()));
    if ((2 - chi) % 2 != 0) throw InvariantViolation("odd Euler characteristic for a closed orientable surface");
    return (2 - chi) / 2;
}

namespace {

// Punctures on either side of boundary position q of face f.
std::pair<long, long> flanks(const CellComplex::Face& f, std::size_t q) {
    std::size_t n = f.boundary.size();
    const auto& before = f.boundary[(q + n - 1) % n];
    const auto& after = f.boundary[(q + 1) % n];
    if (!before.ideal || !after.ideal) throw InvariantViolation("edge not flanked by ideal sides");
    return {before.puncture, after.puncture};
}

}  // namespace

CellComplex cap(const CellComplex& c) {
    CellComplex out = c;
    out.capped = true;
    std::vector<bool> seen(out.edges.size(), false);
    for (const auto& f : out.faces)
        for (std::size_t q = 0; q < f.boundary.size(); ++q) {
            const auto& s = f.boundary[q];
            if (s.ideal || seen[s.edge]) continue;
            auto [u, v] = flanks(f, q);
            if (u < 0 || v < 0) throw InvariantViolation("ideal side without a puncture class");
            out.edges[s.edge].ends = {u, v};
            seen[s.edge] = true;
        }
    return out;
}

bool orientation_consistent(const CellComplex& c) {
    // direction of each edge occurrence relative to the surface orientation
    std::vector<std::vector<int>> dirs(c.edges.size());
    for (const auto& f : c.faces)
        for (std::size_t q = 0; q < f.boundary.size(); ++q) {
            const auto& s = f.boundary[q];
            if (s.ideal) continue;
            auto [u, v] = flanks(f, q);
            if (u == v) return false;
            int planar = u < v ? 1 : -1;
            dirs[s.edge].push_back(planar * f.orientation);
        }
    for (const auto& d : dirs) {
        if (d.size() > 2) return false;
        if (d.size() == 2 && d[0] + d[1] != 0) return false;
    }
    return true;
}

}  // namespace sphaera
