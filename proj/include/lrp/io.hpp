#pragma once

// JSON records and CSV tables.

#include "lrp/loops.hpp"
#include "lrp/reflexive.hpp"

#include "json.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lrp {

using Json = nlohmann::json;

Json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);
Json to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

/// {"l", "vertices", "dual_vertices", "source_id", "hnf_i", "b", "b_dual",
///  "self_dual", "order", "hstar"}
Json to_json(const LReflexiveRecord& r);
/// Rebuilds the polygons; the scalar fields are taken as written.
LReflexiveRecord record_from_json(const Json& j);

/// {"l", "points"}
Json to_json(const Loop& loop);
/// Validates the points as an l-reflexive loop.
Loop loop_from_json(const Json& j);

/// Records of every odd index up to max_l, keyed by index.
using Classification = std::map<long long, std::vector<LReflexiveRecord>>;
Classification classify_up_to(long long max_l, unsigned jobs);

Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& j);

// CSV tables, one function per published table.
std::string table_counts(const Classification& c);
std::string table_self_dual(const Classification& c);
std::string table_3k(const Classification& c);
std::string table_orders(const Classification& c);
/// Odd k with 3k <= max_l.
std::string table_hexagon_i(long long max_l);

}  // namespace lrp
