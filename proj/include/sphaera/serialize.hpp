#pragma once

#include "sphaera/belyi.hpp"
#include "sphaera/carpet.hpp"
#include "sphaera/metrics.hpp"
#include "sphaera/moduli.hpp"
#include "sphaera/torus.hpp"

#include <json.hpp>

#include <string>

namespace sphaera {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& x);
Json to_json(const AngleVector& v);
Json to_json(const Point3& p);
Json to_json(const ExistenceClass& e);
Json to_json(const BalanceClass& b);
Json to_json(const TriangleRecord& t);
Json to_json(const TorusRecord& T);
Json to_json(const AutomorphismReport& a);
Json to_json(const Carpet& c);
Json to_json(const BalancedCarpet& b);
Json to_json(const CarpetCounts& k);
Json to_json(const CellComplex& c);
Json to_json(const ModuliTopology& t);
Json to_json(const ChiReport& r);
Json to_json(const Dessin& d);
Json to_json(const BelyiReport& r);
Json to_json(const BoundReport& b);

Dessin dessin_from_json(const Json& j);

// Face adjacency graphs: polygons joined through shared nodes.
std::string carpet_dot(const Carpet& c);
std::string complex_dot(const CellComplex& c, const std::string& name);
std::string dessin_dot(const Dessin& d);

std::string counts_csv_header();
std::string counts_csv_row(const Rational& theta, const CarpetCounts& k);
std::string moduli_csv_header();
std::string moduli_csv_row(const ModuliTopology& t);

}  // namespace sphaera
