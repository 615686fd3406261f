#include "sphaera/cli.hpp"
#include "sphaera/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace sphaera;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() / ("sphaera-test-" + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "--no-cache");
    return run_cli(args);
}

}  // namespace

TEST_CASE("radian parsing") {
    CHECK(parse_radians("pi") == doctest::Approx(M_PI));
    CHECK(parse_radians("2pi") == doctest::Approx(2 * M_PI));
    CHECK(parse_radians("0.5pi") == doctest::Approx(M_PI / 2));
    CHECK(parse_radians("pi/2") == doctest::Approx(M_PI / 2));
    CHECK(parse_radians("3pi/4") == doctest::Approx(3 * M_PI / 4));
    CHECK(parse_radians("1.25") == doctest::Approx(1.25));
}

TEST_CASE("carpet command") {
    CliResult r = run({"carpet", "7/2"});
    REQUIRE(r.exit_code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["summary"] == "16 triangles, 12 nodes, E=4, N=3");
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["counts"] == j["expected"]);

    CliResult csv = run({"--format", "csv", "carpet", "7/2"});
    CHECK(csv.out == "theta,m,triangles,nodes,E,N,E_minus_N,strips\n7/2,2,16,12,4,3,1,6\n");
}

TEST_CASE("moduli command") {
    Json j = Json::parse(run({"moduli", "2", "--chi"}).out);
    CHECK(j["topology"]["genus"] == 0);
    CHECK(j["topology"]["punctures"] == 1);
    CHECK(j["topology"]["chi_orb"] == "-1/12");
    CHECK(j["chi_consistency"]["ok"] == true);
}

TEST_CASE("odd integral theta is redirected") {
    CliResult r = run({"carpet", "5"});
    CHECK(r.exit_code == kExitUsage);
    CHECK(r.err.find("carpet-odd 2") != std::string::npos);
    CliResult m = run({"moduli", "7"});
    CHECK(m.exit_code == kExitUsage);
    CHECK(m.err.find("moduli-odd 3") != std::string::npos);
    Json odd = Json::parse(run({"moduli-odd", "4"}).out);
    CHECK(odd["topology"]["components"] == 4);
    CHECK(odd["a3_orbits"]["orbits"] == 4);
}

TEST_CASE("dessin command") {
    CliResult r = run({"dessin", "2", "--format", "dot"});
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.out.rfind("graph dessin {", 0) == 0);
    long nodes = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        nodes += line.rfind("  v", 0) == 0 && line.find(" -- ") == std::string::npos;
    CHECK(nodes == 6);
    CHECK(run({"dessin", "1", "--format", "csv"}).exit_code == kExitUsage);
}

TEST_CASE("classify command") {
    Json j = Json::parse(run({"classify", "1/2", "1/2", "1/2"}).out);
    CHECK(j["existence"]["tag"] == "UniqueNonIntegral");
    CHECK(j["voronoi_type"] == "Trefoil");
    CHECK(j["reduced_sides"][0].get<double>() == doctest::Approx(M_PI / 2));

    Json fam = Json::parse(run({"classify", "1 1/2 1/2"}).out);
    CHECK(fam.contains("note"));
    Json member = Json::parse(run({"classify", "1", "1/2", "1/2", "--param", "pi/2"}).out);
    CHECK(member["systole"].get<double>() == doctest::Approx(M_PI / 4));

    CHECK(run({"classify", "1/2", "1/2"}).exit_code == kExitUsage);
    CHECK(run({"classify", "1/2", "x", "1/2"}).exit_code == kExitUsage);
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({"--version"}).exit_code == kExitOk);
}

TEST_CASE("decimal input is snapped with a warning") {
    CliResult r = run({"classify", "0.5", "0.5", "0.5"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.err.find("warning: decimal 0.5") != std::string::npos);
    Json j = Json::parse(r.out);
    CHECK(j["angles"][0] == "1/2");
    CliResult s = run({"classify", "0.333333333333", "0.5", "0.5"});
    CHECK(s.err.find("snapped to 1/3") != std::string::npos);
}

TEST_CASE("bound command") {
    Json j = Json::parse(run({"bound", "--a", "1/2 1/2 1/2", "--b", "1 1 1", "--param-b", "2pi/3,2pi/3,2pi/3"}).out);
    CHECK(j["lipschitz_lower_bound"]["kind"] == "lower");
    CHECK(j["angle_dilatation"]["value"].get<double>() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("output is deterministic and the cache is transparent") {
    TempDir dir;
    std::vector<std::string> args{"--cache-dir", dir.path.string(), "complex", "9/2", "--doubled"};
    CliResult cold = run_cli(args);
    REQUIRE(cold.exit_code == kExitOk);
    CHECK(!std::filesystem::is_empty(dir.path));
    CliResult warm = run_cli(args);
    CHECK(warm.out == cold.out);
    CHECK(run(std::vector<std::string>(args.begin() + 2, args.end())).out == cold.out);
    // a corrupted entry whose key does not match is ignored
    for (const auto& e : std::filesystem::directory_iterator(dir.path))
        if (e.path().extension() == ".key") {
            std::ofstream(e.path()) << "something else";
        }
    CHECK(run_cli(args).out == cold.out);
}
