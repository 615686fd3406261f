#include "sphaera/carpet.hpp"

#include "sphaera/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace sphaera {

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::string point_str(const Point3& p) {
    return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ", " + to_string(p[2]) + ")";
}

void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace

long carpet_m(const Rational& theta) {
    if (theta <= 1) throw DomainError("cone parameter must exceed 1, got " + to_string(theta));
    if (is_integer(theta) && is_odd(floor(theta))) {
        long m = to_long((floor(theta) - 1) / 2);
        throw DomainError("theta = " + to_string(theta) + " is an odd integer; use the integral carpet with m = " +
                          std::to_string(m));
    }
    return to_long(floor((theta + 1) / 2));
}

CarpetCounts closed_form_counts(const Rational& theta) {
    long m = carpet_m(theta);
    CarpetCounts k;
    k.triangles = 4 * m * m;
    k.nodes = 3 * m * m;
    if (theta <= Rational(2 * m)) {
        k.polygons = m * m;
        k.internal_nodes = 3 * m * (m - 1) / 2;
    } else {
        k.polygons = m * m + 3 * m;
        k.internal_nodes = 3 * m * (m + 1) / 2;
    }
    k.strips = 3 * m;
    return k;
}

Rational polygon_area_exact(const std::vector<Point3>& v) {
    Rational twice = 0;
    for (std::size_t q = 0; q < v.size(); ++q) {
        const Point3& a = v[q];
        const Point3& b = v[(q + 1) % v.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return twice / 2;
}

double polygon_area(const std::vector<Point3>& v) { return to_double(polygon_area_exact(v)); }

Carpet enumerate_carpet(const Rational& theta) {
    Carpet out;
    out.theta = theta;
    out.m = carpet_m(theta);
    out.c = theta - Rational(2 * out.m);
    const Rational t_expected = (out.c + 1) / 2;

    // Unit cubes [b, b+1]^3 whose odd-vertex tetrahedron meets the plane.
    long top = to_long(floor(theta));
    for (long s = std::max(0L, top - 3); s <= top; ++s) {
        bool odd = s % 2 != 0;
        Rational lo = odd ? Rational(s) : Rational(s + 1);
        Rational hi = lo + 2;
        if (!(theta > lo && theta < hi)) continue;
        Rational t = (theta - lo) / 2;
        check(t == t_expected, "carpet triangle at unexpected height");
        for (long b0 = 0; b0 <= s; ++b0)
            for (long b1 = 0; b0 + b1 <= s; ++b1) {
                std::array<long, 3> b{b0, b1, s - b0 - b1};
                CarpetTriangle tri;
                tri.cube = b;
                tri.odd_cube = odd;
                for (int k = 0; k < 3; ++k) {
                    Point3 p;
                    for (int i = 0; i < 3; ++i) {
                        Rational base(b[static_cast<std::size_t>(i)]);
                        if (odd)
                            p[i] = i == k ? base : base + t;
                        else
                            p[i] = i == k ? base + 1 : base + t;
                    }
                    tri.vertices[k] = p;
                    tri.edges[k] = IdealLine{k, b[static_cast<std::size_t>(k)]};
                }
                Point3 centroid;
                for (int i = 0; i < 3; ++i)
                    centroid[i] = (tri.vertices[0][i] + tri.vertices[1][i] + tri.vertices[2][i]) / 3;
                check(d1_to_even_lattice(AngleVector(centroid)) > 1,
                      "carpet triangle centroid admits no triangle: " + point_str(centroid));
                check(polygon_area_exact({tri.vertices[0], tri.vertices[1], tri.vertices[2]}) > 0,
                      "carpet triangle not counter-clockwise");
                out.triangles.push_back(tri);
            }
    }

    // Nodes: theta_i = n integral and the other two differ by d of the
    // opposite parity to n with d <= n - 1.
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        for (long n = 1; Rational(n) < theta; ++n) {
            Rational rem = theta - Rational(n);
            for (long d = (n + 1) % 2; d <= n - 1 && Rational(d) < rem; d += 2) {
                for (int sign : {1, -1}) {
                    if (d == 0 && sign < 0) continue;
                    Point3 p;
                    p[i] = Rational(n);
                    p[j] = (rem + Rational(sign * d)) / 2;
                    p[k] = (rem - Rational(sign * d)) / 2;
                    AngleVector v(p);
                    check(condition_a(v, i) && node_condition(v, i), "node fails admissibility: " + v.str());
                    check(v.integral_count() == 1, "node with more than one integral coordinate: " + v.str());
                    out.nodes.push_back({p, i});
                }
            }
        }
    }
    std::sort(out.nodes.begin(), out.nodes.end(), [](const CarpetNode& a, const CarpetNode& b) {
        return std::tie(a.axis, a.point) < std::tie(b.axis, b.point);
    });

    // Nodes are exactly the triangle vertices that carry a triangle.
    std::set<Point3> from_triangles, from_scan;
    for (const auto& tri : out.triangles)
        for (const auto& p : tri.vertices)
            if (p[0] > 0 && p[1] > 0 && p[2] > 0 && classify_existence(AngleVector(p)).exists())
                from_triangles.insert(p);
    for (const auto& nd : out.nodes) from_scan.insert(nd.point);
    check(from_scan.size() == out.nodes.size(), "duplicate nodes");
    check(from_triangles == from_scan, "node scan disagrees with triangle vertices at theta = " + to_string(theta));

    CarpetCounts expect = closed_form_counts(theta);
    check(static_cast<long>(out.triangles.size()) == expect.triangles,
          "carpet at theta = " + to_string(theta) + " has " + std::to_string(out.triangles.size()) +
              " triangles, expected " + std::to_string(expect.triangles));
    check(static_cast<long>(out.nodes.size()) == expect.nodes,
          "carpet at theta = " + to_string(theta) + " has " + std::to_string(out.nodes.size()) + " nodes, expected " +
              std::to_string(expect.nodes));
    return out;
}

namespace {

struct ClipPoly {
    std::vector<Point3> v;
    std::vector<PolygonSide> s;
};

ClipPoly clip(const ClipPoly& p, int axis, const Rational& h) {
    ClipPoly out;
    std::size_t n = p.v.size();
    PolygonSide cut;
    cut.clip = true;
    cut.clip_axis = axis;
    for (std::size_t q = 0; q < n; ++q) {
        const Point3& P = p.v[q];
        const Point3& Q = p.v[(q + 1) % n];
        bool inP = P[axis] <= h, inQ = Q[axis] <= h;
        auto crossing = [&] {
            Rational lambda = (h - P[axis]) / (Q[axis] - P[axis]);
            Point3 x;
            for (int i = 0; i < 3; ++i) x[i] = P[i] + lambda * (Q[i] - P[i]);
            return x;
        };
        if (inP && inQ) {
            out.v.push_back(P);
            out.s.push_back(p.s[q]);
        } else if (inP) {
            Point3 x = crossing();
            if (x == P) {
                out.v.push_back(P);
                out.s.push_back(cut);
            } else {
                out.v.push_back(P);
                out.s.push_back(p.s[q]);
                out.v.push_back(x);
                out.s.push_back(cut);
            }
        } else if (inQ) {
            Point3 x = crossing();
            if (x != Q) {
                out.v.push_back(x);
                out.s.push_back(p.s[q]);
            }
        }
    }
    return out;
}

}  // namespace

BalancedCarpet enumerate_balanced_carpet(const Rational& theta) {
    BalancedCarpet out;
    out.carpet = enumerate_carpet(theta);
    const Carpet& cp = out.carpet;
    const Rational half = theta / 2;
    const long m = cp.m;

    std::map<Point3, std::size_t> node_at;
    for (std::size_t q = 0; q < cp.nodes.size(); ++q) node_at[cp.nodes[q].point] = q;
    std::vector<long> internal_id(cp.nodes.size(), -1);
    for (std::size_t q = 0; q < cp.nodes.size(); ++q) {
        const Point3& p = cp.nodes[q].point;
        if (p[0] < half && p[1] < half && p[2] < half) {
            internal_id[q] = static_cast<long>(out.internal_nodes.size());
            out.internal_nodes.push_back(q);
        }
    }

    for (std::size_t ti = 0; ti < cp.triangles.size(); ++ti) {
        const CarpetTriangle& tri = cp.triangles[ti];
        ClipPoly poly;
        for (int q = 0; q < 3; ++q) {
            poly.v.push_back(tri.vertices[q]);
            PolygonSide side;
            side.line = tri.edges[(q + 2) % 3];  // joins vertices q and q+1
            poly.s.push_back(side);
        }
        for (int axis = 0; axis < 3 && !poly.v.empty(); ++axis) poly = clip(poly, axis, half);
        if (poly.v.size() < 3 || polygon_area_exact(poly.v) <= 0) continue;

        BalancedPolygon bp;
        bp.triangle = ti;
        bp.vertices = poly.v;
        bp.sides = poly.s;
        std::size_t pid = out.polygons.size();
        for (std::size_t q = 0; q < poly.v.size(); ++q) {
            const Point3& p = poly.v[q];
            auto it = node_at.find(p);
            if (it != node_at.end()) {
                if (internal_id[it->second] >= 0) {
                    bp.cycle.push_back({BoundaryItem::Kind::Nodal, {}, internal_id[it->second]});
                } else {
                    int axis = -1;
                    for (int i = 0; i < 3; ++i)
                        if (p[i] == half) axis = i;
                    check(axis >= 0, "node on a balanced polygon is neither internal nor on the boundary");
                    out.semi_balanced_arcs.push_back({axis, p, p, pid});
                    bp.cycle.push_back(
                        {BoundaryItem::Kind::SemiBalanced, {}, static_cast<long>(out.semi_balanced_arcs.size() - 1)});
                }
            } else {
                bool on_edge = p[0] == half || p[1] == half || p[2] == half;
                check(on_edge, "balanced polygon vertex " + point_str(p) + " is not a node");
            }
            const PolygonSide& s = poly.s[q];
            if (s.clip) {
                out.semi_balanced_arcs.push_back({s.clip_axis, p, poly.v[(q + 1) % poly.v.size()], pid});
                bp.cycle.push_back(
                    {BoundaryItem::Kind::SemiBalanced, {}, static_cast<long>(out.semi_balanced_arcs.size() - 1)});
            } else {
                bp.cycle.push_back({BoundaryItem::Kind::Ideal, s.line, -1});
            }
        }
        for (std::size_t q = 0; q < bp.cycle.size(); ++q) {
            bool a = bp.cycle[q].kind == BoundaryItem::Kind::Ideal;
            bool b = bp.cycle[(q + 1) % bp.cycle.size()].kind == BoundaryItem::Kind::Ideal;
            check(a != b, "blown-up boundary of a balanced polygon does not alternate");
        }
        out.polygons.push_back(std::move(bp));
    }

    // Incidence of internal nodes, connectivity, strips.
    std::vector<std::vector<std::size_t>> at_node(out.internal_nodes.size());
    for (std::size_t p = 0; p < out.polygons.size(); ++p)
        for (const auto& it : out.polygons[p].cycle)
            if (it.kind == BoundaryItem::Kind::Nodal) at_node[static_cast<std::size_t>(it.index)].push_back(p);
    Dsu dsu(out.polygons.size());
    for (std::size_t q = 0; q < at_node.size(); ++q) {
        check(at_node[q].size() == 2, "internal node " + point_str(cp.nodes[out.internal_nodes[q]].point) + " lies on " +
                                          std::to_string(at_node[q].size()) + " balanced polygons");
        dsu.unite(at_node[q][0], at_node[q][1]);
    }
    for (std::size_t p = 1; p < out.polygons.size(); ++p)
        check(dsu.find(p) == dsu.find(0), "balanced carpet is disconnected at theta = " + to_string(theta));

    std::set<IdealLine> lines;
    for (const auto& p : out.polygons)
        for (const auto& it : p.cycle)
            if (it.kind == BoundaryItem::Kind::Ideal) lines.insert(it.line);
    out.strips.assign(lines.begin(), lines.end());
    std::vector<IdealLine> expected_strips;
    for (int i = 0; i < 3; ++i)
        for (long a = 0; a < m; ++a) expected_strips.push_back({i, a});
    check(out.strips == expected_strips, "strips of the balanced carpet are not (i, a) with a < m");

    CarpetCounts expect = closed_form_counts(theta);
    CarpetCounts got = counts(out);
    check(got.polygons == expect.polygons && got.internal_nodes == expect.internal_nodes,
          "balanced carpet at theta = " + to_string(theta) + ": E = " + std::to_string(got.polygons) +
              ", N = " + std::to_string(got.internal_nodes) + ", expected E = " + std::to_string(expect.polygons) +
              ", N = " + std::to_string(expect.internal_nodes));
    check(static_cast<long>(out.semi_balanced_arcs.size()) == 3 * m,
          "expected " + std::to_string(3 * m) + " semi-balanced arcs, found " +
              std::to_string(out.semi_balanced_arcs.size()));
    return out;
}

CarpetCounts counts(const BalancedCarpet& b) {
    CarpetCounts k;
    k.triangles = static_cast<long>(b.carpet.triangles.size());
    k.nodes = static_cast<long>(b.carpet.nodes.size());
    k.polygons = static_cast<long>(b.polygons.size());
    k.internal_nodes = static_cast<long>(b.internal_nodes.size());
    k.strips = static_cast<long>(b.strips.size());
    return k;
}

namespace {

CellComplex build_complex(const BalancedCarpet& b, bool doubled) {
    CellComplex cx;
    const std::vector<int> copies = doubled ? std::vector<int>{1, -1} : std::vector<int>{0};
    const std::size_t N = b.internal_nodes.size();
    const std::size_t A = b.semi_balanced_arcs.size();

    for (std::size_t ci = 0; ci < copies.size(); ++ci)
        for (std::size_t q = 0; q < N; ++q) {
            CellComplex::Edge e;
            e.kind = CellComplex::EdgeKind::Nodal;
            e.source = static_cast<long>(q);
            e.copy = copies[ci];
            cx.edges.push_back(e);
        }
    for (std::size_t a = 0; a < A; ++a) {
        CellComplex::Edge e;
        e.kind = CellComplex::EdgeKind::SemiBalanced;
        e.source = static_cast<long>(a);
        cx.edges.push_back(e);
    }

    // Ideal sides get global slot ids; slots of one end are merged below.
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (face, position)
    std::vector<std::vector<std::size_t>> slot_of(copies.size() * b.polygons.size());
    for (std::size_t ci = 0; ci < copies.size(); ++ci)
        for (std::size_t p = 0; p < b.polygons.size(); ++p) {
            CellComplex::Face f;
            f.polygon = p;
            f.copy = copies[ci];
            std::size_t fid = cx.faces.size();
            for (const auto& it : b.polygons[p].cycle) {
                CellComplex::Side s;
                switch (it.kind) {
                    case BoundaryItem::Kind::Ideal:
                        s.ideal = true;
                        s.line = it.line;
                        slot_of[fid].push_back(slots.size());
                        slots.push_back({fid, f.boundary.size()});
                        break;
                    case BoundaryItem::Kind::Nodal:
                        s.edge = ci * N + static_cast<std::size_t>(it.index);
                        break;
                    case BoundaryItem::Kind::SemiBalanced:
                        s.edge = copies.size() * N + static_cast<std::size_t>(it.index);
                        break;
                }
                if (!s.ideal) cx.edges[s.edge].faces.push_back(fid);
                f.boundary.push_back(s);
            }
            cx.faces.push_back(std::move(f));
        }

    auto slot_index = [&](std::size_t fid, std::size_t pos) {
        for (std::size_t s : slot_of[fid])
            if (slots[s].second == pos) return s;
        throw InvariantViolation("missing ideal slot");
    };
    // occurrences of every edge: (face, position)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occ(cx.edges.size());
    for (std::size_t fid = 0; fid < cx.faces.size(); ++fid)
        for (std::size_t q = 0; q < cx.faces[fid].boundary.size(); ++q)
            if (!cx.faces[fid].boundary[q].ideal) occ[cx.faces[fid].boundary[q].edge].push_back({fid, q});

    Dsu dsu(slots.size());
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        const auto& o = occ[e];
        bool nodal = cx.edges[e].kind == CellComplex::EdgeKind::Nodal;
        bool interior = nodal || doubled;
        check(o.size() == (interior ? 2u : 1u), "edge with wrong number of incident faces");
        std::vector<std::array<std::size_t, 2>> ends;
        for (auto [fid, q] : o) {
            const auto& bd = cx.faces[fid].boundary;
            std::size_t n = bd.size();
            std::size_t before = (q + n - 1) % n, after = (q + 1) % n;
            check(bd[before].ideal && bd[after].ideal, "edge not flanked by ideal sides");
            check(bd[before].line != bd[after].line, "edge flanked twice by the same line");
            ends.push_back({slot_index(fid, before), slot_index(fid, after)});
        }
        if (o.size() < 2) continue;
        auto line = [&](std::size_t s) { return cx.faces[slots[s].first].boundary[slots[s].second].line; };
        for (std::size_t x : ends[0]) {
            bool matched = false;
            for (std::size_t y : ends[1])
                if (line(x) == line(y)) {
                    dsu.unite(x, y);
                    matched = true;
                }
            check(matched, "the two sides of an edge see different lines");
        }
    }

    std::map<std::size_t, IdealLine> class_line;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        IdealLine l = cx.faces[slots[s].first].boundary[slots[s].second].line;
        auto [it, fresh] = class_line.emplace(dsu.find(s), l);
        check(fresh || it->second == l, "one end of the surface meets two different lines");
    }
    std::map<IdealLine, long> puncture_of;
    for (const auto& [root, l] : class_line) {
        check(!puncture_of.count(l), "a line splits into several ends: " + to_string(l));
        puncture_of[l] = 0;
    }
    for (auto& [l, id] : puncture_of) {
        id = static_cast<long>(cx.punctures.size());
        cx.punctures.push_back(l);
    }
    for (auto& f : cx.faces)
        for (auto& s : f.boundary)
            if (s.ideal) s.puncture = puncture_of.at(s.line);

    // Orientation: faces across an interior edge must traverse it oppositely.
    auto dir = [&](std::size_t fid, std::size_t q) {
        const auto& bd = cx.faces[fid].boundary;
        std::size_t n = bd.size();
        return bd[(q + n - 1) % n].puncture < bd[(q + 1) % n].puncture ? 1 : -1;
    };
    std::vector<int> orient(cx.faces.size(), 0);
    std::queue<std::size_t> queue;
    orient[0] = 1;
    queue.push(0);
    std::vector<std::vector<std::size_t>> face_edges(cx.faces.size());
    for (std::size_t e = 0; e < cx.edges.size(); ++e)
        for (auto [fid, q] : occ[e]) face_edges[fid].push_back(e);
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop();
        for (std::size_t e : face_edges[f]) {
            if (occ[e].size() != 2) continue;
            auto [f0, q0] = occ[e][0];
            auto [f1, q1] = occ[e][1];
            std::size_t g = f0 == f ? f1 : f0;
            int want = -orient[f] * dir(f0, q0) * dir(f1, q1);
            if (orient[g] == 0) {
                orient[g] = want;
                queue.push(g);
            } else {
                check(orient[g] == want, "complex is not orientable");
            }
        }
    }
    for (std::size_t f = 0; f < cx.faces.size(); ++f) check(orient[f] != 0, "complex is disconnected");
    // Normalize: even-cube polygons of the first copy agree with the plane.
    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        const auto& tri = b.carpet.triangles[b.polygons[cx.faces[f].polygon].triangle];
        if (cx.faces[f].copy >= 0 && !tri.odd_cube) {
            if (orient[f] < 0)
                for (int& o : orient) o = -o;
            break;
        }
    }
    for (std::size_t f = 0; f < cx.faces.size(); ++f) cx.faces[f].orientation = orient[f];
    return cx;
}

}  // namespace

CellComplex build_blowup_complex(const BalancedCarpet& b) {
    CellComplex cx = build_complex(b, false);
    long m = b.carpet.m;
    check(cx.euler_characteristic() == -m * (m - 3) / 2, "bordered complex has the wrong Euler characteristic");
    check(cx.boundary_edges() == 3 * m, "bordered complex has the wrong number of boundary intervals");
    return cx;
}

CellComplex build_doubled_complex(const BalancedCarpet& b) {
    CellComplex cx = build_complex(b, true);
    long m = b.carpet.m;
    check(cx.euler_characteristic() == -m * m, "doubled complex has the wrong Euler characteristic");
    check(static_cast<long>(cx.punctures.size()) == 3 * m, "doubled complex has the wrong number of punctures");
    return cx;
}

CellComplex build_blowup_complex(const Rational& theta) { return build_blowup_complex(enumerate_balanced_carpet(theta)); }

CellComplex build_doubled_complex(const Rational& theta) { return build_doubled_complex(enumerate_balanced_carpet(theta)); }

IdealLine apply_permutation(const IdealLine& p, const std::array<int, 3>& perm) {
    return IdealLine{perm[static_cast<std::size_t>(p.axis)], p.a};
}

std::vector<std::vector<IdealLine>> s3_orbits_on_punctures(const CellComplex& complex) {
    const auto& P = complex.punctures;
    std::map<IdealLine, std::size_t> index;
    for (std::size_t q = 0; q < P.size(); ++q) index[P[q]] = q;
    Dsu dsu(P.size());
    const std::array<std::array<int, 3>, 2> gens{{{1, 0, 2}, {1, 2, 0}}};  // generate S3
    for (std::size_t q = 0; q < P.size(); ++q)
        for (const auto& g : gens) {
            auto it = index.find(apply_permutation(P[q], g));
            check(it != index.end(), "S3 does not preserve the punctures");
            dsu.unite(q, it->second);
        }
    std::map<std::size_t, std::vector<IdealLine>> orbits;
    for (std::size_t q = 0; q < P.size(); ++q) orbits[dsu.find(q)].push_back(P[q]);
    std::vector<std::vector<IdealLine>> out;
    for (auto& [root, orbit] : orbits) {
        std::sort(orbit.begin(), orbit.end());
        out.push_back(orbit);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front().a < y.front().a; });
    return out;
}

std::vector<IntegralNode> enumerate_integral_carpet(long m) {
    if (m < 1) throw DomainError("m must be positive");
    std::vector<IntegralNode> out;
    const long total = 2 * m + 1;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= m; ++b) {
            long c = total - a - b;
            if (c < 1 || c > m) continue;
            IntegralNode node;
            node.angles = {a, b, c};
            AngleVector v{Rational(a), Rational(b), Rational(c)};
            ExistenceClass e = classify_existence(v);
            check(e.tag == ExistenceTag::FamilyThreeIntegral, "integral node without a triangle: " + v.str());
            check(classify_balance(v).tag == BalanceTag::Strict, "integral node not strictly balanced: " + v.str());
            node.n = *e.n;
            out.push_back(node);
        }
    check(static_cast<long>(out.size()) == m * (m + 1) / 2, "integral carpet has the wrong number of nodes");
    return out;
}

}  // namespace sphaera
