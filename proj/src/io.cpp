#include "lrp/io.hpp"

#include <set>
#include <sstream>

namespace lrp {

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(to_int64(v[i]));
  return a;
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw GeometryError("lattice point must be a JSON array");
  if (j.size() == 2) return {j[0].get<long long>(), j[1].get<long long>()};
  if (j.size() == 3) return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>()};
  throw GeometryError("lattice point must have 2 or 3 coordinates");
}

Json to_json(const Polygon& p) {
  Json a = Json::array();
  for (const auto& v : p.vertices()) a.push_back(to_json(v));
  return a;
}

Polygon polygon_from_json(const Json& j) {
  std::vector<LatticeVector> pts;
  for (const auto& v : j) pts.push_back(vector_from_json(v));
  return Polygon(std::move(pts));
}

Json to_json(const LReflexiveRecord& r) {
  auto h = hstar(r);
  return Json{{"l", r.index},
              {"vertices", to_json(r.polygon)},
              {"dual_vertices", to_json(r.dual)},
              {"source_id", r.source_id},
              {"hnf_i", r.hnf_i},
              {"b", r.b},
              {"b_dual", r.b_dual},
              {"self_dual", r.self_dual},
              {"order", r.order},
              {"hstar", {to_int64(h.c0), to_int64(h.c1), to_int64(h.c2)}}};
}

LReflexiveRecord record_from_json(const Json& j) {
  LReflexiveRecord r;
  r.index = j.at("l").get<long long>();
  r.polygon = polygon_from_json(j.at("vertices"));
  r.dual = polygon_from_json(j.at("dual_vertices"));
  r.source_id = j.at("source_id").get<int>();
  r.hnf_i = j.at("hnf_i").get<long long>();
  r.b = j.at("b").get<std::size_t>();
  r.b_dual = j.at("b_dual").get<std::size_t>();
  r.self_dual = j.at("self_dual").get<bool>();
  r.order = j.at("order").get<long long>();
  return r;
}

Json to_json(const Loop& loop) {
  Json pts = Json::array();
  for (const auto& p : loop.points) pts.push_back(to_json(p));
  return Json{{"l", loop.index}, {"points", pts}};
}

Loop loop_from_json(const Json& j) {
  std::vector<LatticeVector> pts;
  for (const auto& p : j.at("points")) pts.push_back(vector_from_json(p));
  return validate_loop(std::move(pts), j.at("l").get<long long>());
}

Classification classify_up_to(long long max_l, unsigned jobs) {
  Classification c;
  for (long long l = 1; l <= max_l; l += 2) c[l] = classify(l, jobs);
  return c;
}

Json classification_to_json(const Classification& c) {
  Json out = Json::array();
  for (const auto& [l, records] : c)
    for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

Classification classification_from_json(const Json& j) {
  if (!j.is_array()) throw GeometryError("classification must be a JSON array of records");
  Classification c;
  for (const auto& rec : j) {
    auto r = record_from_json(rec);
    c[r.index].push_back(std::move(r));
  }
  return c;
}

namespace {

std::string two_row_table(const std::string& key, const std::string& value,
                          const std::vector<std::pair<long long, std::size_t>>& cells) {
  std::ostringstream head, body;
  head << key;
  body << value;
  for (const auto& [k, v] : cells) {
    head << ',' << k;
    body << ',' << v;
  }
  return head.str() + "\n" + body.str() + "\n";
}

std::string join_quoted(const std::vector<long long>& xs) {
  std::ostringstream s;
  if (xs.size() > 1) s << '"';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  if (xs.size() > 1) s << '"';
  return s.str();
}

}  // namespace

std::string table_counts(const Classification& c) {
  std::vector<std::pair<long long, std::size_t>> cells;
  for (const auto& [l, records] : c) cells.emplace_back(l, records.size());
  return two_row_table("l", "n(l)", cells);
}

std::string table_self_dual(const Classification& c) {
  std::vector<std::pair<long long, std::size_t>> cells;
  for (const auto& [l, records] : c) {
    std::size_t s = 0;
    for (const auto& r : records) s += r.self_dual;
    cells.emplace_back(l, s);
  }
  return two_row_table("l", "s(l)", cells);
}

std::string table_3k(const Classification& c) {
  std::vector<std::pair<long long, std::size_t>> cells;
  for (const auto& [l, records] : c)
    if (l % 3 == 0) cells.emplace_back(l / 3, records.size());
  return two_row_table("k", "n(3k)", cells);
}

std::string table_orders(const Classification& c) {
  std::ostringstream s;
  s << "l,o_P\n";
  for (const auto& [l, records] : c) {
    std::set<long long> orders;
    for (const auto& r : records) orders.insert(r.order);
    s << l << ',' << join_quoted({orders.begin(), orders.end()}) << '\n';
  }
  return s.str();
}

std::string table_hexagon_i(long long max_l) {
  std::ostringstream s;
  s << "k,i\n";
  for (long long k = 1; 3 * k <= max_l; k += 2) s << k << ',' << join_quoted(hexagon_classes_3k(k)) << '\n';
  return s.str();
}

}  // namespace lrp
