#include "sphaera/belyi.hpp"
#include "sphaera/errors.hpp"
#include "sphaera/serialize.hpp"

#include <doctest.h>

#include <regex>
#include <sstream>

using namespace sphaera;

TEST_CASE("permutations") {
    Permutation p = parse_cycle_notation("(0 1 2)(3 4)", 6);
    CHECK(p == Permutation{1, 2, 0, 4, 3, 5});
    CHECK(cycle_notation(p) == "(0 1 2)(3 4)(5)");
    CHECK(cycle_type(p) == std::vector<std::size_t>{1, 2, 3});
    CHECK(is_identity(compose(p, inverse(p))));
    CHECK(compose(Permutation{1, 0, 2}, Permutation{0, 2, 1}) == Permutation{1, 2, 0});
    CHECK(is_transitive({Permutation{1, 2, 0}}));
    CHECK_FALSE(is_transitive({Permutation{1, 0, 2}}));
    CHECK(is_regular({Permutation{1, 2, 0}}));
    // S3 on three points is transitive but not regular
    CHECK_FALSE(is_regular({Permutation{1, 0, 2}, Permutation{1, 2, 0}}));
    CHECK_THROWS_AS(parse_cycle_notation("(0 0)", 2), DomainError);
}

TEST_CASE("dessin for m = 1") {
    Dessin d = build_dessin(1);
    CHECK(d.sheets.size() == 1);
    CHECK(d.vertices.size() == 3);
    CHECK(d.faces.size() == 2);
    CHECK(d.euler_characteristic() == 2);
    CHECK(d.sigma0 == Permutation{0});
}

TEST_CASE("dessin structure") {
    for (long m = 1; m <= 5; ++m) {
        CAPTURE(m);
        Dessin d = build_dessin(m);
        CHECK(static_cast<long>(d.sheets.size()) == m * m);
        CHECK(static_cast<long>(d.faces.size()) == 2 * m * m);
        CHECK(static_cast<long>(d.vertices.size()) == 3 * m);
        CHECK(d.euler_characteristic() == 2 - 2 * ((m - 1) * (m - 2) / 2));
        long ram = 0;
        for (const auto& v : d.vertices) ram += v.ramification;
        CHECK(ram == 3 * m * m);
        std::vector<long> adjacent(d.vertices.size(), 0);
        for (const auto& f : d.faces)
            for (std::size_t v : f.vertices) ++adjacent[v];
        for (std::size_t v = 0; v < d.vertices.size(); ++v) CHECK(adjacent[v] == 2 * d.vertices[v].ramification);
        for (const auto& f : d.faces)
            for (int c = 0; c < 3; ++c) CHECK(d.vertices[f.vertices[static_cast<std::size_t>(c)]].color == c);
        for (const auto& e : d.edges) CHECK(d.faces[e.faces[0]].sign != d.faces[e.faces[1]].sign);
        for (const Sheet& s : d.sheets) {
            CHECK(d.faces[s.white].sign == 1);
            CHECK(d.faces[s.black].sign == -1);
        }
    }
}

TEST_CASE("monodromy and the Belyi report") {
    for (long m = 1; m <= 5; ++m) {
        CAPTURE(m);
        BelyiReport r = verify_belyi_invariants(m);
        CHECK(r.degree == m * m);
        CHECK(r.cycle_types_ok);
        CHECK(r.product_identity);
        CHECK(r.transitive);
        CHECK(r.ramification_ok);
        CHECK(r.genus_riemann_hurwitz == r.genus_expected);
        CHECK(r.regular == (m == 1));
        CHECK(r.uniform_cycle_lengths == (m == 1));
        CHECK(r.ok());
        MonodromyTriple t = monodromy(build_dessin(m));
        CHECK(is_identity(compose(t.sigma_inf, compose(t.sigma1, t.sigma0))));
    }
}

TEST_CASE("dessin export") {
    Dessin d = build_dessin(3);
    std::string dot = export_dessin(d, "dot");
    CHECK(dot.rfind("graph dessin {", 0) == 0);
    CHECK(dot.back() == '\n');
    // every statement is a node or an undirected edge
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line);
    const std::regex stmt(R"(\s*(\w+="[^"]*";|\w+( -- \w+)?( \[[^\]]*\])?;|\}))");
    long edges = 0;
    while (std::getline(in, line)) {
        CHECK_MESSAGE(std::regex_match(line, stmt), line);
        edges += line.find(" -- ") != std::string::npos;
    }
    CHECK(edges == static_cast<long>(d.edges.size()));

    Dessin back = dessin_from_json(export_dessin(d, "json"));
    CHECK(back == d);
    CHECK_THROWS_AS(export_dessin(d, "svg"), DomainError);
    CHECK_THROWS_AS(dessin_from_json(std::string("{\"m\": 1}")), DomainError);
}

TEST_CASE("dessin membership") {
    CHECK(dessin_membership(make_angles("1", "1/2", "1/2")));
    CHECK(dessin_membership(make_angles("2", "3/2", "1/2")));
    CHECK_FALSE(dessin_membership(make_angles("1/2", "3/4", "3/4")));
    CHECK(dessin_membership(make_angles("1", "3/2", "3/2")));
    CHECK(dessin_membership(make_angles("1", "1", "2")));
    CHECK_THROWS_AS(dessin_membership(make_angles("1/2", "1/2", "1/2")), DomainError);
    CHECK_THROWS_AS(dessin_membership(make_angles("3", "1/2", "1/2")), DomainError);
}
