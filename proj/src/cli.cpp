#include "sphaera/cli.hpp"

#include "sphaera/cache.hpp"
#include "sphaera/errors.hpp"
#include "sphaera/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace sphaera {

std::string default_cache_dir() {
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/sphaera";
    if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/sphaera";
    return ".sphaera-cache";
}

double parse_radians(const std::string& text) {
    std::string s = text;
    std::size_t pos = s.find("pi");
    std::size_t len = 2;
    if (pos == std::string::npos) {
        pos = s.find("\xCF\x80");  // UTF-8 pi
        len = 2;
    }
    if (pos == std::string::npos) {
        double v = to_double(parse_rational(s));
        return v;
    }
    // forms: pi, 2pi, 1/2pi, 0.5pi, pi/2, 3pi/4
    std::string coef = s.substr(0, pos);
    std::string rest = s.substr(pos + len);
    Rational c = coef.empty() ? Rational(1) : parse_rational(coef);
    if (!rest.empty()) {
        if (rest[0] != '/') throw DomainError("cannot read angle '" + text + "'");
        c /= parse_rational(rest.substr(1));
    }
    return to_double(c) * kPi;
}

namespace {

struct Context {
    Config cfg;
    std::ostringstream err;

    Rational number(const std::string& text) {
        SnapResult r = parse_snapped(text, Integer(cfg.rational_snap_denominator_bound));
        if (r.decimal) err << "warning: " << r.note << "\n";
        return r.value;
    }

    AngleVector angles(const std::vector<std::string>& parts) {
        std::vector<std::string> items;
        for (const auto& p : parts) {
            std::string q = p;
            std::replace(q.begin(), q.end(), ',', ' ');
            std::istringstream is(q);
            std::string tok;
            while (is >> tok) items.push_back(tok);
        }
        if (items.size() != 3) throw DomainError("expected three angle parameters, got " + std::to_string(items.size()));
        return AngleVector(number(items[0]), number(items[1]), number(items[2]));
    }

    Rational theta(const std::string& text) { return number(text); }
};

std::string exact_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json envelope(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["version"] = SPHAERA_VERSION;
    return j;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed, const std::string& command) {
    for (const char* f : allowed)
        if (cfg.output_format == f) return;
    throw DomainError("format '" + cfg.output_format + "' is not available for " + command);
}

// Triangle record for whatever the angle vector admits, if anything.
std::optional<TriangleRecord> realize(const AngleVector& v, const std::string& param, double tol) {
    ExistenceClass e = classify_existence(v);
    switch (e.tag) {
        case ExistenceTag::NoneExists: return std::nullopt;
        case ExistenceTag::UniqueNonIntegral: return realize_nonintegral(v, tol);
        case ExistenceTag::FamilyOneIntegral:
            if (param.empty()) return std::nullopt;
            return realize_one_integral(v, parse_radians(param), tol);
        case ExistenceTag::FamilyThreeIntegral: {
            if (param.empty()) return std::nullopt;
            std::array<double, 3> arcs{};
            std::stringstream ss(param);
            std::string tok;
            int k = 0;
            while (std::getline(ss, tok, ',')) {
                if (k >= 3) throw DomainError("three-integral parameter needs three arcs l12,l23,l13");
                arcs[k++] = parse_radians(tok);
            }
            if (k != 3) throw DomainError("three-integral parameter needs three arcs l12,l23,l13");
            return realize_three_integral(*e.n, arcs, tol);
        }
    }
    return std::nullopt;
}

TorusRecord torus_from(Context& ctx, const std::string& spec, const std::string& param) {
    AngleVector v = ctx.angles({spec});
    auto t = realize(v, param, ctx.cfg.float_tolerance);
    if (!t) throw DomainError(v.str() + " does not determine a triangle (missing --param or no triangle exists)");
    return build_torus(*t, Orientation::Positive);
}

std::string carpet_summary(const CarpetCounts& k) {
    return std::to_string(k.triangles) + " triangles, " + std::to_string(k.nodes) + " nodes, E=" +
           std::to_string(k.polygons) + ", N=" + std::to_string(k.internal_nodes);
}

void odd_guard(const Rational& theta, const std::string& command, const std::string& odd_command) {
    if (theta > 1 && is_integer(theta) && is_odd(floor(theta))) {
        long m = to_long((floor(theta) - 1) / 2);
        throw DomainError("theta = " + to_string(theta) + " is an odd integer; use `" + odd_command + " " +
                          std::to_string(m) + "` instead of `" + command + "`");
    }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    Context ctx;
    ctx.cfg.cache_dir = default_cache_dir();
    std::function<std::string()> compute;
    std::string command;

    CLI::App app{"Spherical triangles, tori with one conical point, and their moduli", "sphaera"};
    app.set_version_flag("--version", std::string(SPHAERA_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", ctx.cfg.output_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "dot"}))
        ->envname("SPHAERA_FORMAT");
    app.add_option("--tolerance", ctx.cfg.float_tolerance, "Absolute tolerance on trigonometric values")
        ->check(CLI::Range(0.0, 1e-3))
        ->envname("SPHAERA_TOLERANCE");
    app.add_option("--snap-bound", ctx.cfg.rational_snap_denominator_bound, "Largest denominator when snapping decimals")
        ->check(CLI::PositiveNumber)
        ->envname("SPHAERA_SNAP_BOUND");
    app.add_option("--cache-dir", ctx.cfg.cache_dir, "Cache directory")->envname("SPHAERA_CACHE_DIR");
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "Do not read or write the cache")->envname("SPHAERA_NO_CACHE");

    std::vector<std::string> angle_args;
    std::string param;
    auto* classify = app.add_subcommand("classify", "Classify the triangle with angles pi*(t1, t2, t3)");
    classify->add_option("angles", angle_args, "Three angle parameters, p/q or decimal")->required()->expected(1, 3);
    classify->add_option("--param", param, "Family parameter: s (one integral angle) or l12,l23,l13; e.g. 0.5pi");

    auto* torus = app.add_subcommand("torus", "Torus glued from a balanced triangle");
    torus->add_option("angles", angle_args, "Three angle parameters")->required()->expected(1, 3);
    torus->add_option("--param", param, "Family parameter");

    std::string theta_text;
    auto* autom = app.add_subcommand("automorphisms", "Exceptional automorphism groups at cone parameter theta");
    autom->add_option("theta", theta_text)->required();

    auto* carpet = app.add_subcommand("carpet", "Angle carpet and balanced carpet at theta");
    carpet->add_option("theta", theta_text)->required();

    long m_arg = 0;
    auto* carpet_odd = app.add_subcommand("carpet-odd", "Integral carpet at theta = 2m+1");
    carpet_odd->add_option("m", m_arg)->required()->check(CLI::PositiveNumber);

    bool doubled = false;
    auto* complex = app.add_subcommand("complex", "Blow-up cell complex of the balanced carpet");
    complex->add_option("theta", theta_text)->required();
    complex->add_flag("--doubled", doubled, "Doubled complex instead of the bordered one");

    auto* moduli = app.add_subcommand("moduli", "Topology of the moduli space at non-odd theta");
    moduli->add_option("theta", theta_text)->required();
    bool with_chi = false;
    moduli->add_flag("--chi", with_chi, "Include the Euler characteristic cross-checks");

    bool sigma_only = false;
    auto* moduli_odd = app.add_subcommand("moduli-odd", "Components of the moduli space at theta = 2m+1");
    moduli_odd->add_option("m", m_arg)->required()->check(CLI::PositiveNumber);
    moduli_odd->add_flag("--sigma-invariant", sigma_only, "Only the two-dimensional sigma-invariant part");

    auto* dessin = app.add_subcommand("dessin", "Dessin d'enfant of the 2-marked moduli space at theta = 2m");
    dessin->add_option("m", m_arg)->required()->check(CLI::PositiveNumber);

    long max_m = 6;
    auto* belyi = app.add_subcommand("belyi-table", "Degree, genus, cycle types and normality for m = 1..max");
    belyi->add_option("--max-m", max_m, "Largest m")->check(CLI::Range(1, 12));

    std::string spec_a, spec_b, param_a, param_b;
    auto* bound = app.add_subcommand("bound", "Lower bound on the Lipschitz distance between two tori");
    bound->add_option("--a", spec_a, "Angles of the first triangle, e.g. \"1/2 1/2 1/2\"")->required();
    bound->add_option("--b", spec_b, "Angles of the second triangle")->required();
    bound->add_option("--param-a", param_a, "Family parameter of the first triangle");
    bound->add_option("--param-b", param_b, "Family parameter of the second triangle");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? kExitOk : kExitUsage;
        return result;
    }
    ctx.cfg.use_cache = !no_cache;
    const Config& cfg = ctx.cfg;

    try {
        if (classify->parsed()) {
            command = "classify";
            require_format(cfg, {"json"}, command);
            AngleVector v = ctx.angles(angle_args);
            compute = [&ctx, v, param] {
                Json j = envelope("classify");
                j["angles"] = to_json(v);
                ExistenceClass e = classify_existence(v);
                BalanceClass b = classify_balance(v);
                j["existence"] = to_json(e);
                j["balance"] = to_json(b);
                j["d1_even_lattice"] = to_string(d1_to_even_lattice(v));
                if (e.exists()) {
                    Circumcenter cc = circumcenter_class(v);
                    j["circumcenter"] = {{"kind", to_string(cc.kind)}};
                    if (cc.index >= 0) j["circumcenter"]["index"] = cc.index + 1;
                    j["voronoi_type"] = to_string(voronoi_type_of_double(v));
                }
                auto t = realize(v, param, ctx.cfg.float_tolerance);
                if (t) {
                    j["triangle"] = to_json(*t);
                    j["reduced_sides"] = t->reduced_sides;
                    if (t->balance.balanced()) j["systole"] = triangle_systole(*t);
                } else if (e.tag == ExistenceTag::FamilyOneIntegral || e.tag == ExistenceTag::FamilyThreeIntegral) {
                    j["note"] = "one-parameter family; pass --param to realize a member";
                }
                return dump(j);
            };
        } else if (torus->parsed()) {
            command = "torus";
            require_format(cfg, {"json"}, command);
            TorusRecord T = torus_from(ctx, [&] {
                std::string s;
                for (const auto& a : angle_args) s += a + " ";
                return s;
            }(), param);
            compute = [T] {
                Json j = envelope("torus");
                j["torus"] = to_json(T);
                if (T.triangle.existence.tag == ExistenceTag::FamilyThreeIntegral) {
                    EdgeMultipliers em = voronoi_edge_parity_check(T);
                    j["voronoi_edge_multipliers"] = *em.multipliers;
                    j["voronoi_edges_odd"] = em.all_odd;
                }
                return dump(j);
            };
        } else if (autom->parsed()) {
            command = "automorphisms";
            require_format(cfg, {"json"}, command);
            Rational theta = ctx.theta(theta_text);
            compute = [theta] {
                Json j = envelope("automorphisms");
                j["report"] = to_json(automorphism_group(theta));
                return dump(j);
            };
        } else if (carpet->parsed()) {
            command = "carpet";
            Rational theta = ctx.theta(theta_text);
            odd_guard(theta, command, "carpet-odd");
            compute = [theta, &cfg] {
                BalancedCarpet b = enumerate_balanced_carpet(theta);
                CarpetCounts k = counts(b);
                if (cfg.output_format == "csv") return counts_csv_header() + counts_csv_row(theta, k);
                if (cfg.output_format == "dot") return carpet_dot(b.carpet);
                Json j = envelope("carpet");
                j["theta"] = to_string(theta);
                j["counts"] = to_json(k);
                j["expected"] = to_json(closed_form_counts(theta));
                j["summary"] = carpet_summary(k);
                j["balanced_carpet"] = to_json(b);
                return dump(j);
            };
        } else if (carpet_odd->parsed()) {
            command = "carpet-odd";
            require_format(cfg, {"json", "csv"}, command);
            long m = m_arg;
            compute = [m, &cfg] {
                auto nodes = enumerate_integral_carpet(m);
                if (cfg.output_format == "csv") {
                    std::string s = "theta1,theta2,theta3,n1,n2,n3\n";
                    for (const auto& n : nodes)
                        s += std::to_string(n.angles[0]) + "," + std::to_string(n.angles[1]) + "," +
                             std::to_string(n.angles[2]) + "," + std::to_string(n.n[0]) + "," + std::to_string(n.n[1]) +
                             "," + std::to_string(n.n[2]) + "\n";
                    return s;
                }
                Json j = envelope("carpet-odd");
                j["m"] = m;
                j["theta"] = 2 * m + 1;
                Json arr = Json::array();
                for (const auto& n : nodes)
                    arr.push_back({{"angles", n.angles}, {"n", n.n}, {"parameter_domain", "arcs l12+l23+l13 = 2pi, open 2-simplex"}});
                j["nodes"] = arr;
                j["count"] = nodes.size();
                return dump(j);
            };
        } else if (complex->parsed()) {
            command = "complex";
            require_format(cfg, {"json", "dot"}, command);
            Rational theta = ctx.theta(theta_text);
            odd_guard(theta, command, "carpet-odd");
            compute = [theta, doubled, &cfg] {
                CellComplex c = doubled ? build_doubled_complex(theta) : build_blowup_complex(theta);
                if (cfg.output_format == "dot") return complex_dot(c, doubled ? "doubled" : "blowup");
                Json j = envelope("complex");
                j["theta"] = to_string(theta);
                j["doubled"] = doubled;
                j["complex"] = to_json(c);
                if (doubled) {
                    j["genus"] = c.genus();
                    Json orbits = Json::array();
                    for (const auto& o : s3_orbits_on_punctures(c)) {
                        Json x = Json::array();
                        for (const auto& l : o) x.push_back(to_string(l));
                        orbits.push_back(x);
                    }
                    j["s3_orbits"] = orbits;
                }
                return dump(j);
            };
        } else if (moduli->parsed()) {
            command = "moduli";
            require_format(cfg, {"json", "csv"}, command);
            Rational theta = ctx.theta(theta_text);
            odd_guard(theta, command, "moduli-odd");
            compute = [theta, with_chi, &cfg] {
                ModuliTopology t = moduli_topology_nonodd(theta);
                if (cfg.output_format == "csv") return moduli_csv_header() + moduli_csv_row(t);
                Json j = envelope("moduli");
                j["topology"] = to_json(t);
                j["monodromy"] = {{"coaxial", monodromy_predicates(theta).coaxial}, {"klein", monodromy_predicates(theta).klein}};
                if (with_chi) j["chi_consistency"] = to_json(chi_consistency(theta));
                return dump(j);
            };
        } else if (moduli_odd->parsed()) {
            command = "moduli-odd";
            require_format(cfg, {"json", "csv"}, command);
            long m = m_arg;
            compute = [m, sigma_only, &cfg] {
                ModuliTopology t = moduli_topology_odd(m, sigma_only);
                if (cfg.output_format == "csv") return moduli_csv_header() + moduli_csv_row(t);
                OrbitCount oc = a3_orbits(enumerate_integral_carpet(m));
                Json j = envelope("moduli-odd");
                j["topology"] = to_json(t);
                j["a3_orbits"] = {{"orbits", oc.orbits}, {"fixed", oc.fixed}};
                return dump(j);
            };
        } else if (dessin->parsed()) {
            command = "dessin";
            require_format(cfg, {"json", "dot"}, command);
            long m = m_arg;
            compute = [m, &cfg] { return export_dessin(build_dessin(m), cfg.output_format); };
        } else if (belyi->parsed()) {
            command = "belyi-table";
            require_format(cfg, {"json", "csv"}, command);
            compute = [max_m, &cfg] {
                std::vector<BelyiReport> rows;
                for (long m = 1; m <= max_m; ++m) rows.push_back(verify_belyi_invariants(m));
                if (cfg.output_format == "csv") {
                    std::string s = "m,degree,genus,cycle_type,galois,ok\n";
                    for (const auto& r : rows) {
                        std::string ct;
                        for (std::size_t q = 0; q < r.cycle_types[0].size(); ++q)
                            ct += (q ? " " : "") + std::to_string(r.cycle_types[0][q]);
                        s += std::to_string(r.m) + "," + std::to_string(r.degree) + "," +
                             std::to_string(r.genus_riemann_hurwitz) + "," + ct + "," + (r.regular ? "yes" : "no") + "," +
                             (r.ok() ? "yes" : "no") + "\n";
                    }
                    return s;
                }
                Json j = envelope("belyi-table");
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(to_json(r));
                j["rows"] = arr;
                return dump(j);
            };
        } else if (bound->parsed()) {
            command = "bound";
            require_format(cfg, {"json"}, command);
            TorusRecord a = torus_from(ctx, spec_a, param_a);
            TorusRecord b = torus_from(ctx, spec_b, param_b);
            compute = [a, b] {
                Json j = envelope("bound");
                j["angle_dilatation"] = to_json(angle_dilatation_bound(a.cone_parameter(), b.cone_parameter()));
                j["angle_distance"] = to_json(angle_distance_bound(a.cone_parameter(), b.cone_parameter()));
                j["systole_distance"] = to_json(systole_distance_bound(a.systole(), b.systole()));
                j["lipschitz_lower_bound"] = to_json(lipschitz_lower_bound(a, b));
                return dump(j);
            };
        }

        std::string key;
        for (const auto& a : args) key += a + '\x1f';
        key = std::string("sphaera ") + SPHAERA_VERSION + '\x1e' + cfg.output_format + '\x1e' +
              exact_double(cfg.float_tolerance) + '\x1e' + std::to_string(cfg.rational_snap_denominator_bound) + '\x1e' +
              command + '\x1e' + key;
        Cache cache(cfg.cache_dir);
        std::optional<std::string> hit;
        if (cfg.use_cache) hit = cache.get(key);
        if (hit) {
            result.out = *hit;
        } else {
            result.out = compute();
            if (cfg.use_cache && !cache.put(key, result.out))
                ctx.err << "warning: could not write cache in " << cfg.cache_dir << "\n";
        }
        result.exit_code = kExitOk;
    } catch (const DomainError& e) {
        ctx.err << "error: " << e.what() << "\n";
        result.exit_code = kExitUsage;
    } catch (const InvariantViolation& e) {
        ctx.err << "invariant violation: " << e.what() << "\n";
        result.exit_code = kExitInvariant;
    } catch (const nlohmann::json::exception& e) {
        ctx.err << "error: " << e.what() << "\n";
        result.exit_code = kExitUsage;
    }
    result.err = ctx.err.str();
    return result;
}

}  // namespace sphaera
