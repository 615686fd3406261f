#include "sphaera/serialize.hpp"

#include "sphaera/errors.hpp"

#include <map>
#include <set>
#include <sstream>

namespace sphaera {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const AngleVector& v) { return Json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

Json to_json(const Point3& p) { return Json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}); }

Json to_json(const ExistenceClass& e) {
    Json j;
    j["tag"] = to_string(e.tag);
    if (e.tag == ExistenceTag::FamilyOneIntegral) {
        j["integral_index"] = e.integral_index + 1;
        Json branches = Json::array();
        if (e.case_a) branches.push_back("caseA");
        if (e.case_b) branches.push_back("caseB");
        j["branches"] = branches;
        if (e.theta) j["theta"] = to_string(*e.theta);
    }
    if (e.n) j["n"] = *e.n;
    return j;
}

Json to_json(const BalanceClass& b) {
    Json j;
    j["tag"] = to_string(b.tag);
    if (b.tag != BalanceTag::Strict) j["index"] = b.index + 1;
    return j;
}

Json to_json(const TriangleRecord& t) {
    Json j;
    j["angles"] = to_json(t.angles);
    j["existence"] = to_json(t.existence);
    j["balance"] = to_json(t.balance);
    j["area_over_pi"] = to_string(t.area_over_pi());
    j["reduced_sides"] = t.reduced_sides;
    if (t.full_sides) j["full_sides"] = *t.full_sides;
    if (t.s) j["s"] = *t.s;
    if (t.arcs) j["arcs"] = *t.arcs;
    j["degenerate"] = t.degenerate;
    if (t.balance.balanced()) j["systole"] = triangle_systole(t);
    return j;
}

Json to_json(const TorusRecord& T) {
    Json j;
    j["triangle"] = to_json(T.triangle);
    j["orientation"] = T.orientation == Orientation::Positive ? "+" : "-";
    j["marking"] = Json::array({T.marking[0] + 1, T.marking[1] + 1, T.marking[2] + 1});
    j["cone_parameter"] = to_string(T.cone_parameter());
    j["area_over_pi"] = to_string(T.area_over_pi());
    j["systole"] = T.systole();
    TorusVoronoi v = torus_voronoi(T);
    j["voronoi"] = {{"tag", to_string(v.tag)},
                    {"vertices", v.vertices},
                    {"edges", v.edges},
                    {"rectangular_involution", v.has_rectangular_involution}};
    return j;
}

Json to_json(const AutomorphismReport& a) {
    return {{"theta", to_string(a.theta)},
            {"Z6_exists", a.z6_exists},
            {"Z6_witness", to_json(a.z6_witness)},
            {"Z4_exists", a.z4_exists},
            {"Z4_witness", to_json(a.z4_witness)},
            {"generic", "Z2"}};
}

namespace {

Json line_json(const IdealLine& l) { return {{"axis", l.axis + 1}, {"a", l.a}, {"label", to_string(l)}}; }

}  // namespace

Json to_json(const Carpet& c) {
    Json j;
    j["theta"] = to_string(c.theta);
    j["m"] = c.m;
    j["c"] = to_string(c.c);
    Json tris = Json::array();
    for (const auto& t : c.triangles) {
        Json v = Json::array(), e = Json::array();
        for (int k = 0; k < 3; ++k) {
            v.push_back(to_json(t.vertices[k]));
            e.push_back(line_json(t.edges[k]));
        }
        tris.push_back({{"cube", t.cube}, {"odd_cube", t.odd_cube}, {"vertices", v}, {"edge_lines", e}});
    }
    j["triangles"] = tris;
    Json nodes = Json::array();
    for (const auto& n : c.nodes) nodes.push_back({{"point", to_json(n.point)}, {"integral_index", n.axis + 1}});
    j["nodes"] = nodes;
    return j;
}

Json to_json(const BalancedCarpet& b) {
    Json j;
    j["carpet"] = to_json(b.carpet);
    Json polys = Json::array();
    for (const auto& p : b.polygons) {
        Json v = Json::array(), cyc = Json::array();
        for (const auto& x : p.vertices) v.push_back(to_json(x));
        for (const auto& it : p.cycle) {
            switch (it.kind) {
                case BoundaryItem::Kind::Ideal: cyc.push_back({{"ideal", to_string(it.line)}}); break;
                case BoundaryItem::Kind::Nodal: cyc.push_back({{"node", it.index}}); break;
                case BoundaryItem::Kind::SemiBalanced: cyc.push_back({{"semi_balanced", it.index}}); break;
            }
        }
        polys.push_back({{"triangle", p.triangle}, {"vertices", v}, {"cycle", cyc}});
    }
    j["polygons"] = polys;
    Json nodes = Json::array();
    for (std::size_t q : b.internal_nodes) nodes.push_back(to_json(b.carpet.nodes[q].point));
    j["internal_nodes"] = nodes;
    Json arcs = Json::array();
    for (const auto& a : b.semi_balanced_arcs)
        arcs.push_back({{"axis", a.axis + 1}, {"from", to_json(a.from)}, {"to", to_json(a.to)}, {"polygon", a.polygon}});
    j["semi_balanced_arcs"] = arcs;
    Json strips = Json::array();
    for (const auto& s : b.strips) strips.push_back(line_json(s));
    j["strips"] = strips;
    return j;
}

Json to_json(const CarpetCounts& k) {
    return {{"triangles", k.triangles}, {"nodes", k.nodes},     {"E", k.polygons},
            {"N", k.internal_nodes},    {"E_minus_N", k.euler()}, {"strips", k.strips}};
}

Json to_json(const CellComplex& c) {
    Json j;
    j["capped"] = c.capped;
    j["vertices"] = c.vertex_count();
    j["interior_edges"] = c.interior_edges();
    j["boundary_edges"] = c.boundary_edges();
    j["faces"] = c.faces.size();
    j["euler_characteristic"] = c.euler_characteristic();
    Json p = Json::array();
    for (const auto& l : c.punctures) p.push_back(to_string(l));
    j["punctures"] = p;
    Json edges = Json::array();
    for (const auto& e : c.edges) {
        Json x = {{"kind", e.kind == CellComplex::EdgeKind::Nodal ? "nodal" : "semi_balanced"},
                  {"source", e.source},
                  {"copy", e.copy},
                  {"faces", e.faces}};
        if (c.capped) x["ends"] = e.ends;
        edges.push_back(x);
    }
    j["edges"] = edges;
    Json faces = Json::array();
    for (const auto& f : c.faces) {
        Json bd = Json::array();
        for (const auto& s : f.boundary) {
            if (s.ideal)
                bd.push_back({{"puncture", s.puncture}});
            else
                bd.push_back({{"edge", s.edge}});
        }
        faces.push_back({{"polygon", f.polygon}, {"copy", f.copy}, {"orientation", f.orientation}, {"boundary", bd}});
    }
    j["cells"] = faces;
    return j;
}

Json to_json(const ModuliTopology& t) {
    Json j;
    if (t.theta) j["theta"] = to_string(*t.theta);
    j["m"] = t.m;
    j["genus"] = t.genus;
    j["punctures"] = t.punctures;
    if (t.chi_orb) j["chi_orb"] = to_string(*t.chi_orb);
    Json pts = Json::array();
    for (const auto& p : t.orbifold_points) pts.push_back({{"order", p.order}, {"count", p.count}});
    j["orbifold_points"] = pts;
    j["generic_order"] = t.generic_order;
    j["dimension"] = t.dimension;
    j["components"] = t.components;
    if (!t.component_types.empty()) j["component_types"] = t.component_types;
    return j;
}

Json to_json(const ChiReport& r) {
    return {{"theta", to_string(r.theta)},
            {"m", r.m},
            {"chi_MS", to_string(r.chi_ms)},
            {"chi_MS2", to_string(r.chi_ms2)},
            {"chi_MT", r.chi_mt},
            {"epsilon", to_string(r.epsilon)},
            {"chi_top", to_string(r.chi_top)},
            {"genus_direct", to_string(r.genus_direct)},
            {"genus_closed", r.genus_closed},
            {"ok", r.ok()},
            {"mismatches", r.mismatches}};
}

Json to_json(const Dessin& d) {
    static const char* names[] = {"0", "1", "inf"};
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = d.m;
    Json verts = Json::array();
    for (const auto& v : d.vertices)
        verts.push_back({{"color", names[v.color]}, {"a", v.a}, {"ramification", v.ramification}});
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& e : d.edges)
        edges.push_back({{"vertices", e.vertices}, {"faces", e.faces}, {"semi_balanced", e.semi_balanced}, {"copy", e.copy}});
    j["edges"] = edges;
    Json faces = Json::array();
    for (const auto& f : d.faces)
        faces.push_back({{"vertices", f.vertices},
                         {"edges", f.edges},
                         {"sign", f.sign},
                         {"polygon", f.polygon},
                         {"copy", f.copy}});
    j["faces"] = faces;
    Json sheets = Json::array();
    for (const auto& s : d.sheets) sheets.push_back({{"white", s.white}, {"black", s.black}});
    j["sheets"] = sheets;
    j["rotation"] = d.rotation;
    j["monodromy"] = {{"degree", d.sheets.size()},
                      {"sigma0", cycle_notation(d.sigma0)},
                      {"sigma1", cycle_notation(d.sigma1)},
                      {"sigma_inf", cycle_notation(d.sigma_inf)}};
    return j;
}

Dessin dessin_from_json(const Json& j) {
    Dessin d;
    d.m = j.at("m").get<long>();
    for (const auto& v : j.at("vertices")) {
        std::string c = v.at("color").get<std::string>();
        int color = c == "0" ? 0 : c == "1" ? 1 : c == "inf" ? 2 : -1;
        if (color < 0) throw DomainError("bad vertex color '" + c + "'");
        d.vertices.push_back({color, v.at("a").get<long>(), v.at("ramification").get<long>()});
    }
    for (const auto& e : j.at("edges"))
        d.edges.push_back({e.at("vertices").get<std::array<std::size_t, 2>>(), e.at("faces").get<std::array<std::size_t, 2>>(),
                           e.at("semi_balanced").get<bool>(), e.at("copy").get<int>()});
    for (const auto& f : j.at("faces"))
        d.faces.push_back({f.at("vertices").get<std::array<std::size_t, 3>>(), f.at("edges").get<std::array<std::size_t, 3>>(),
                           f.at("sign").get<int>(), f.at("polygon").get<std::size_t>(), f.at("copy").get<int>()});
    for (const auto& s : j.at("sheets")) d.sheets.push_back({s.at("white").get<std::size_t>(), s.at("black").get<std::size_t>()});
    d.rotation = j.at("rotation").get<std::vector<std::vector<std::size_t>>>();
    const Json& mono = j.at("monodromy");
    std::size_t n = mono.at("degree").get<std::size_t>();
    d.sigma0 = parse_cycle_notation(mono.at("sigma0").get<std::string>(), n);
    d.sigma1 = parse_cycle_notation(mono.at("sigma1").get<std::string>(), n);
    d.sigma_inf = parse_cycle_notation(mono.at("sigma_inf").get<std::string>(), n);
    return d;
}

Dessin dessin_from_json(const std::string& text) {
    try {
        return dessin_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed dessin JSON: ") + e.what());
    }
}

Json to_json(const BelyiReport& r) {
    Json types = Json::array();
    for (const auto& t : r.cycle_types) types.push_back(t);
    return {{"m", r.m},
            {"degree", r.degree},
            {"V", r.vertices},
            {"E", r.edges},
            {"F", r.faces},
            {"euler_characteristic", r.euler_characteristic},
            {"cycle_types", types},
            {"cycle_types_ok", r.cycle_types_ok},
            {"product_identity", r.product_identity},
            {"transitive", r.transitive},
            {"galois", r.regular},
            {"uniform_cycle_lengths", r.uniform_cycle_lengths},
            {"genus_riemann_hurwitz", r.genus_riemann_hurwitz},
            {"genus_expected", r.genus_expected},
            {"ramification_ok", r.ramification_ok},
            {"ok", r.ok()}};
}

Json to_json(const BoundReport& b) { return {{"value", b.value}, {"kind", to_string(b.kind)}, {"source", b.source}}; }

std::string carpet_dot(const Carpet& c) {
    std::map<Point3, std::vector<std::size_t>> at;
    for (std::size_t t = 0; t < c.triangles.size(); ++t)
        for (const auto& p : c.triangles[t].vertices) at[p].push_back(t);
    std::set<Point3> nodes;
    for (const auto& n : c.nodes) nodes.insert(n.point);
    std::ostringstream os;
    os << "graph carpet {\n";
    os << "  label=\"theta = " << to_string(c.theta) << "\";\n";
    for (std::size_t t = 0; t < c.triangles.size(); ++t)
        os << "  t" << t << " [shape=triangle" << (c.triangles[t].odd_cube ? ", style=filled" : "") << "];\n";
    for (const auto& [p, ts] : at) {
        if (!nodes.count(p) || ts.size() < 2) continue;
        for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = a + 1; b < ts.size(); ++b)
                os << "  t" << ts[a] << " -- t" << ts[b] << " [label=\"(" << to_string(p[0]) << ", " << to_string(p[1])
                   << ", " << to_string(p[2]) << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string complex_dot(const CellComplex& c, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        os << "  f" << f << " [label=\"P" << c.faces[f].polygon
           << (c.faces[f].copy > 0 ? "+" : c.faces[f].copy < 0 ? "-" : "") << "\"];\n";
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& ed = c.edges[e];
        if (ed.faces.size() != 2) continue;
        os << "  f" << ed.faces[0] << " -- f" << ed.faces[1] << " [label=\"e" << e << "\""
           << (ed.kind == CellComplex::EdgeKind::SemiBalanced ? ", style=dashed" : "") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string dessin_dot(const Dessin& d) {
    static const char* names[] = {"0", "1", "inf"};
    static const char* styles[] = {"shape=circle, style=filled, fillcolor=black, fontcolor=white",
                                   "shape=circle, style=filled, fillcolor=white",
                                   "shape=square, style=filled, fillcolor=gray"};
    std::ostringstream os;
    os << "graph dessin {\n";
    os << "  label=\"m = " << d.m << "\";\n";
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << names[d.vertices[v].color] << ":" << d.vertices[v].a << " e"
           << d.vertices[v].ramification << "\", " << styles[d.vertices[v].color] << "];\n";
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        os << "  v" << d.edges[e].vertices[0] << " -- v" << d.edges[e].vertices[1] << " [label=\"e" << e << "\""
           << (d.edges[e].semi_balanced ? ", style=dashed" : "") << "];\n";
    os << "}\n";
    return os.str();
}

std::string export_dessin(const Dessin& d, const std::string& format) {
    if (format == "dot") return dessin_dot(d);
    if (format == "json") return to_json(d).dump(2) + "\n";
    throw DomainError("unknown dessin export format '" + format + "'");
}

std::string counts_csv_header() { return "theta,m,triangles,nodes,E,N,E_minus_N,strips\n"; }

std::string counts_csv_row(const Rational& theta, const CarpetCounts& k) {
    std::ostringstream os;
    os << to_string(theta) << ',' << carpet_m(theta) << ',' << k.triangles << ',' << k.nodes << ',' << k.polygons << ','
       << k.internal_nodes << ',' << k.euler() << ',' << k.strips << '\n';
    return os.str();
}

std::string moduli_csv_header() { return "theta,m,genus,punctures,chi_orb,order4,order6,dimension,components\n"; }

std::string moduli_csv_row(const ModuliTopology& t) {
    int o4 = 0, o6 = 0;
    for (const auto& p : t.orbifold_points) {
        if (p.order == 4) o4 = p.count;
        if (p.order == 6) o6 = p.count;
    }
    std::ostringstream os;
    os << (t.theta ? to_string(*t.theta) : std::to_string(2 * t.m + 1)) << ',' << t.m << ',' << t.genus << ','
       << t.punctures << ',' << (t.chi_orb ? to_string(*t.chi_orb) : "") << ',' << o4 << ',' << o6 << ','
       << t.dimension << ',' << t.components << '\n';
    return os.str();
}

}  // namespace sphaera
