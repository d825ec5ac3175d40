#include "lrp/reflexive.hpp"

#include "lrp/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lrp {

bool is_ldp(const Polygon& p) {
  if (!p.contains_origin_strictly()) return false;
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const LatticeVector& v) { return is_primitive(v); });
}

Integer gorenstein_index(const Polygon& p) {
  Integer l = 1;
  for (const auto& e : edges(p)) l = boost::multiprecision::lcm(l, e.local_index);
  return l;
}

std::optional<long long> is_l_reflexive(const Polygon& p) {
  if (!is_ldp(p)) return std::nullopt;
  auto es = edges(p);
  for (const auto& e : es)
    if (e.local_index != es.front().local_index) return std::nullopt;
  return to_int64(es.front().local_index);
}

Polygon dual_scaled(const Polygon& p, long long l) {
  auto idx = is_l_reflexive(p);
  if (!idx || *idx != l) throw GeometryError("not l-reflexive");
  std::vector<LatticeVector> normals;
  for (auto& e : edges(p)) normals.push_back(std::move(e.normal));
  // Outer normals of a counterclockwise cycle are again counterclockwise.
  return Polygon(std::move(normals));
}

// ---------------------------------------------------------------------------
// The sixteen 1-reflexive polygons.

namespace {

constexpr int kOracleRadius = 3;

// Closed polygon contains the origin and no interior lattice point but it.
bool at_most_origin_inside(const Polygon& p) {
  for (const auto& h : half_planes(p))
    if (h.offset < 0) return false;
  std::size_t n = count_interior_points(p);
  if (n == 0) return true;
  return n == 1 && p.contains_origin_strictly();
}

std::vector<LatticeVector> oracle_box() {
  std::vector<LatticeVector> box;
  for (int x = -kOracleRadius; x <= kOracleRadius; ++x)
    for (int y = -kOracleRadius; y <= kOracleRadius; ++y) box.emplace_back(x, y);
  return box;
}

bool in_closed(const Polygon& p, const LatticeVector& x) {
  for (const auto& h : half_planes(p))
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

}  // namespace

Polygon normalize_source(const Polygon& q) {
  const LatticeVector& v = q.vertex(0);
  const LatticeVector u = edges(q).front().normal;
  if (dot(u, v) != 1) throw GeometryError("not 1-reflexive");
  // v·W = (0,1) and the edge <u, x> = 1 becomes the edge y = 1.
  IntMatrix w{{v.y(), u.x()}, {-v.x(), u.y()}};
  return apply_matrix(q, w);
}

std::vector<Polygon> enumerate_1_reflexive() {
  // Intermediate polygons may have the origin on the boundary: every polygon
  // with interior ⊆ {0} is reached from one of its vertex triangles by adding
  // its remaining vertices one at a time.
  const auto box = oracle_box();
  std::map<IntMatrix, Polygon> seen;
  std::vector<Polygon> frontier;
  auto offer = [&](Polygon p) {
    if (!at_most_origin_inside(p)) return;
    auto key = canonical_form(p);
    if (seen.emplace(std::move(key), p).second) frontier.push_back(std::move(p));
  };
  for (std::size_t a = 0; a < box.size(); ++a)
    for (std::size_t b = a + 1; b < box.size(); ++b)
      for (std::size_t c = b + 1; c < box.size(); ++c) {
        if (det2(box[b] - box[a], box[c] - box[a]) == 0) continue;
        std::vector<LatticeVector> tri{box[a], box[b], box[c]};
        offer(convex_hull(tri));
      }
  while (!frontier.empty()) {
    std::vector<Polygon> current;
    current.swap(frontier);
    for (const auto& p : current)
      for (const auto& x : box) {
        if (in_closed(p, x)) continue;
        std::vector<LatticeVector> pts = p.vertices();
        pts.push_back(x);
        offer(convex_hull(pts));
      }
  }

  std::vector<std::pair<std::size_t, IntMatrix>> keyed;
  for (const auto& [key, p] : seen)
    if (p.contains_origin_strictly() && count_interior_points(p) == 1)
      keyed.emplace_back(count_boundary_points(p), key);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Polygon> out;
  for (const auto& [b, key] : keyed) out.push_back(normalize_source(polygon_from_columns(key)));
  return out;
}

const std::vector<Polygon>& reflexive_sources() {
  static const std::vector<Polygon> sources = enumerate_1_reflexive();
  return sources;
}

int source_id_of(const Polygon& q) {
  const auto& src = reflexive_sources();
  auto key = canonical_form(q);
  for (std::size_t k = 0; k < src.size(); ++k)
    if (src[k].size() == q.size() && canonical_form(src[k]) == key) return static_cast<int>(k + 1);
  return 0;
}

int hexagon_source_id() {
  static const int id = [] {
    std::vector<LatticeVector> pts{{0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, 0}, {-1, 0}};
    return source_id_of(convex_hull(pts));
  }();
  return id;
}

IntMatrix quotient_matrix(long long l, long long i) { return IntMatrix{{l, i}, {0, 1}}; }

long long dual_hnf_parameter(long long l, long long i) {
  if (l == 1) return 0;
  return to_int64(mod_floor(-inverse_mod(i, l), l));
}

long long euler_phi(long long n) {
  long long count = 0;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// ---------------------------------------------------------------------------

LReflexiveRecord make_record(const Polygon& p, long long l, int source_id, long long hnf_i) {
  LReflexiveRecord r;
  r.polygon = p;
  r.index = l;
  r.dual = dual_scaled(p, l);
  r.source_id = source_id;
  r.hnf_i = hnf_i;
  r.b = count_boundary_points(p);
  r.b_dual = count_boundary_points(r.dual);
  r.self_dual = is_isomorphic(p, r.dual);
  r.order = order_of(p);
  return r;
}

std::vector<LReflexiveRecord> classify(long long l, unsigned jobs) {
  if (l < 1) throw GeometryError("index must be positive");
  const auto& sources = reflexive_sources();
  struct Candidate {
    int source_id;
    long long i;
  };
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    if (l == 1) {
      candidates.push_back({static_cast<int>(k + 1), 0});
      continue;
    }
    for (long long i = 1; i < l; ++i)
      if (std::gcd(l, i) == 1) candidates.push_back({static_cast<int>(k + 1), i});
  }

  std::vector<std::optional<IntMatrix>> keys(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t c) {
    const auto& cand = candidates[c];
    Polygon p = apply_matrix(sources[cand.source_id - 1],
                             l == 1 ? IntMatrix::identity(2) : quotient_matrix(l, cand.i));
    auto idx = is_l_reflexive(p);
    if (idx && *idx == l) keys[c] = canonical_form(p);
  });

  // First candidate in (source, i) order names the class.
  std::map<IntMatrix, Candidate> classes;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (keys[c]) classes.emplace(*keys[c], candidates[c]);

  std::vector<std::pair<const IntMatrix*, Candidate>> ordered;
  for (const auto& [key, cand] : classes) ordered.emplace_back(&key, cand);
  std::vector<LReflexiveRecord> out(ordered.size());
  parallel_for(ordered.size(), jobs, [&](std::size_t k) {
    out[k] = make_record(polygon_from_columns(*ordered[k].first), l, ordered[k].second.source_id,
                         ordered[k].second.i);
  });
  return out;
}

SublatticeInfo boundary_sublattice(const Polygon& p) {
  if (!is_l_reflexive(p)) throw GeometryError("not l-reflexive");
  auto pts = boundary_points(p);
  return sublattice_of(pts);
}

Polygon associated_one_reflexive(const Polygon& p) {
  auto lattice = boundary_sublattice(p);
  auto coords = restrict_to_sublattice(p.vertices(), lattice);
  // The Hermite basis has positive determinant, so orientation is kept.
  return Polygon(std::move(coords));
}

bool twelve_check(const LReflexiveRecord& r) { return r.b + r.b_dual == 12; }

long long order_of(const Polygon& p) {
  auto es = edges(p);
  // A nonzero interior point x lies in int(P/k) iff k<u_F,x> < l_F for every
  // edge; it drops out from k_x = min over <u_F,x> > 0 of ceil(l_F/<u_F,x>) on.
  Integer order = 1;
  for (const auto& x : interior_points(p)) {
    if (x.is_zero()) continue;
    std::optional<Integer> kx;
    for (const auto& e : es) {
      Integer s = dot(e.normal, x);
      if (s <= 0) continue;
      Integer k = ceil_div(e.local_index, s);
      if (!kx || k < *kx) kx = std::move(k);
    }
    if (kx && *kx > order) order = *kx;
  }
  return to_int64(order);
}

HStarVector hstar(const LReflexiveRecord& r) {
  const Integer l = r.index, b = r.b;
  if (l % 2 == 0) throw GeometryError("closed form needs an odd index");
  return {1, (l + 1) / 2 * b - 2, (l - 1) / 2 * b + 1};
}

HStarVector hstar_from_counts(const Polygon& p) {
  // Ehr(t) = h*(t)/(1-t)^3: L(1) = 3 + c1, L(2) = 6 + 3 c1 + c2.
  Integer l1 = count_lattice_points(p);
  Integer l2 = count_lattice_points(scaled(p, 2));
  Integer c1 = l1 - 3;
  return {1, c1, l2 - 6 - 3 * c1};
}

EhrhartQuadratic ehrhart_quadratic(const Polygon& p) {
  return {Rational(normalized_volume(p), 2), Rational(Integer(count_boundary_points(p)), 2), Rational(1)};
}

EhrhartQuadratic ehrhart_from_counts(const Polygon& p) {
  Rational l0 = 1;
  Rational l1 = Rational(Integer(count_lattice_points(p)));
  Rational l2 = Rational(Integer(count_lattice_points(scaled(p, 2))));
  // Newton forward differences through m = 0, 1, 2.
  Rational a2 = (l2 - 2 * l1 + l0) / 2;
  Rational a1 = l1 - l0 - a2;
  return {a2, a1, l0};
}

bool ehrhart_roots_on_line(const Polygon& p, long long l) {
  const Integer vol = normalized_volume(p);
  const Integer b = count_boundary_points(p);
  // Roots of (V/2) m^2 + (b/2) m + 1: real part -b/(2V) when b^2 - 8V <= 0;
  // two distinct real roots otherwise.
  if (vol != l * b) return false;
  return b * b - 8 * l * b <= 0;
}

bool is_ldp_roots_imply_reflexive(const Polygon& p) {
  if (!is_ldp(p)) throw GeometryError("not an LDP polygon");
  long long l = to_int64(gorenstein_index(p));
  if (!ehrhart_roots_on_line(p, l)) return true;
  auto idx = is_l_reflexive(p);
  return idx && *idx == l;
}

// ---------------------------------------------------------------------------

std::vector<long long> hexagon_classes_3k(long long k) {
  if (k < 1 || k % 2 == 0) throw GeometryError("index not ≡ 3 mod 6 family");
  const long long l = 3 * k;
  std::vector<long long> cand;
  for (long long i = 1; i < l; ++i)
    if (std::gcd(l, i) == 1 && std::gcd(l, i + 1) == 1) cand.push_back(i);

  auto md = [l](long long x) { return ((x % l) + l) % l; };
  std::vector<std::set<long long>> signature;
  for (long long i : cand) {
    long long j = to_int64(mod_floor(-inverse_mod(i, l), l));
    long long h = to_int64(inverse_mod(-i - 1, l));
    signature.push_back({md(i), md(-i), md(j), md(-j), md(-i - 1), md(h)});
  }
  auto meets = [&](std::size_t a, std::size_t b) {
    for (long long x : signature[a])
      if (signature[b].count(x)) return true;
    return false;
  };

  std::vector<std::size_t> parent(cand.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (meets(a, b)) parent[find(b)] = find(a);

  // Meeting signatures must already be an equivalence relation.
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (find(a) == find(b) && !meets(a, b))
        throw GeometryError("signature relation is not transitive for k = " + std::to_string(k));

  std::map<std::size_t, long long> smallest;
  for (std::size_t a = 0; a < cand.size(); ++a) smallest.emplace(find(a), cand[a]);
  std::vector<long long> reps;
  for (const auto& [root, i] : smallest) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool verify_3k_structure(long long k, unsigned jobs) {
  const int hex = hexagon_source_id();
  auto records = classify(3 * k, jobs);
  for (const auto& r : records)
    if (r.polygon.size() != 6 || !r.self_dual || r.source_id != hex) return false;
  return records.size() == hexagon_classes_3k(k).size();
}

}  // namespace lrp
