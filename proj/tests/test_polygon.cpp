#include "doctest.h"

#include "lrp/polygon.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace lrp;

namespace {

Polygon hull(std::vector<LatticeVector> pts) { return convex_hull(pts); }

Polygon p_l(long long l) { return hull({{0, 1}, {0, -1}, {l, 2}, {-l, -2}, {l, 1}, {-l, -1}}); }

const Polygon kSquare = hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
const Polygon kHexagon = hull({{0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, 0}, {-1, 0}});
const Polygon kBigTriangle = hull({{-1, -1}, {-1, 2}, {2, -1}});
const Polygon kFiveTriangle = hull({{-7, -10}, {2, 5}, {1, 0}});

IntMatrix random_unimodular(std::mt19937& rng) {
  IntMatrix m = IntMatrix::identity(2);
  std::uniform_int_distribution<int> coef(-3, 3), coin(0, 2);
  for (int step = 0; step < 6; ++step) {
    int c = coin(rng);
    if (c == 0) m.swap_rows(0, 1);
    else if (c == 1) m.sub_row_multiple(0, 1, coef(rng));
    else m.sub_row_multiple(1, 0, coef(rng));
  }
  return m;
}

// Bounding-box scan with exact half-plane tests.
std::pair<std::set<LatticeVector>, std::set<LatticeVector>> box_scan(const Polygon& p) {
  Integer lo_x = p.vertex(0).x(), hi_x = lo_x, lo_y = p.vertex(0).y(), hi_y = lo_y;
  for (const auto& v : p.vertices()) {
    lo_x = std::min(lo_x, v.x());
    hi_x = std::max(hi_x, v.x());
    lo_y = std::min(lo_y, v.y());
    hi_y = std::max(hi_y, v.y());
  }
  auto planes = half_planes(p);
  std::set<LatticeVector> interior, boundary;
  for (Integer x = lo_x; x <= hi_x; ++x)
    for (Integer y = lo_y; y <= hi_y; ++y) {
      LatticeVector q(x, y);
      bool inside = true, tight = false;
      for (const auto& h : planes) {
        Integer s = dot(h.normal, q);
        inside = inside && s <= h.offset;
        tight = tight || s == h.offset;
      }
      if (!inside) continue;
      (tight ? boundary : interior).insert(q);
    }
  return {interior, boundary};
}

std::vector<Polygon> random_polygons(std::mt19937& rng, int count) {
  std::uniform_int_distribution<int> d(-7, 7), n(3, 8);
  std::vector<Polygon> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<LatticeVector> pts;
    for (int k = n(rng); k > 0; --k) pts.emplace_back(d(rng), d(rng));
    try {
      out.push_back(convex_hull(pts));
    } catch (const GeometryError&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("convex_hull") {
  auto t = hull({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(t.size() == 3);
  CHECK(p_l(3).size() == 6);
  auto absorbed = hull({{1, 0}, {0, 1}, {-1, -1}, {0, 0}});
  CHECK(absorbed.size() == 3);
  CHECK(hull({{2, 0}, {1, 0}, {0, 0}, {0, 1}}).size() == 3);
  CHECK_THROWS_WITH_AS(hull({{0, 0}, {1, 1}, {2, 2}}), doctest::Contains("degenerate hull"), GeometryError);
}

TEST_CASE("Polygon validates its cycle") {
  CHECK_THROWS_AS(Polygon({{1, 0}, {-1, -1}, {0, 1}}), GeometryError);
  CHECK_THROWS_AS(Polygon({{1, 0}, {0, 0}, {-1, 0}, {0, 1}}), GeometryError);
  CHECK_NOTHROW(Polygon({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(kSquare.contains_origin_strictly());
  CHECK_FALSE(hull({{0, 0}, {1, 0}, {0, 1}}).contains_origin_strictly());
}

TEST_CASE("edges") {
  auto sq = edges(kSquare);
  REQUIRE(sq.size() == 4);
  std::set<LatticeVector> allowed{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& e : sq) {
    CHECK(allowed.count(e.normal) == 1);
    CHECK(e.local_index == 1);
  }

  auto hex = edges(p_l(3));
  REQUIRE(hex.size() == 6);
  for (const auto& e : hex) CHECK(e.local_index == 3);

  auto tri = edges(kFiveTriangle);
  REQUIRE(tri.size() == 3);
  std::multiset<Integer> lengths;
  std::set<LatticeVector> normals;
  for (const auto& e : tri) {
    CHECK(e.local_index == 5);
    CHECK(is_primitive(e.normal));
    CHECK(dot(e.normal, e.tail) == e.local_index);
    CHECK(dot(e.normal, e.head) == e.local_index);
    CHECK(e.lattice_length == (e.head - e.tail).content());
    lengths.insert(e.lattice_length);
    normals.insert(e.normal);
  }
  CHECK(lengths == std::multiset<Integer>{1, 2, 3});
  CHECK(normals == std::set<LatticeVector>{{-5, 3}, {5, -1}, {5, -4}});

  CHECK_THROWS_WITH_AS(edges(hull({{0, 0}, {1, 0}, {0, 1}})), doctest::Contains("origin not interior"),
                       GeometryError);
}

TEST_CASE("boundary and interior points") {
  CHECK(boundary_points(kBigTriangle).size() == 9);
  CHECK(boundary_points(p_l(3)).size() == 6);
  CHECK(boundary_points(kSquare).size() == 4);
  CHECK(interior_points(kSquare) == std::vector<LatticeVector>{{0, 0}});
  CHECK(interior_points(p_l(3)).size() == 7);
  CHECK(interior_points(kFiveTriangle).size() == 13);
  CHECK(count_interior_points(kFiveTriangle) == 13);
  CHECK(count_boundary_points(kFiveTriangle) == 6);
  CHECK(count_lattice_points(kFiveTriangle) == 19);

  // Cyclic order: consecutive boundary points differ by a primitive step.
  auto pts = boundary_points(kBigTriangle);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(is_primitive(pts[(i + 1) % pts.size()] - pts[i]));
}

TEST_CASE("lattice points agree with a bounding-box scan") {
  std::mt19937 rng(11);
  for (const auto& p : random_polygons(rng, 200)) {
    auto [interior, boundary] = box_scan(p);
    auto in = interior_points(p);
    auto bd = boundary_points(p);
    CHECK(std::set<LatticeVector>(in.begin(), in.end()) == interior);
    CHECK(std::set<LatticeVector>(bd.begin(), bd.end()) == boundary);
    CHECK(in.size() == interior.size());
    CHECK(bd.size() == boundary.size());
    CHECK(count_interior_points(p) == interior.size());
    CHECK(count_boundary_points(p) == boundary.size());
    CHECK(count_lattice_points(p) == interior.size() + boundary.size());
  }
}

TEST_CASE("Pick's theorem and boundary length") {
  std::mt19937 rng(12);
  for (const auto& p : random_polygons(rng, 200)) {
    CHECK(normalized_volume(p) == 2 * Integer(count_interior_points(p)) + count_boundary_points(p) - 2);
    Integer total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += (p.vertex(i + 1) - p.vertex(i)).content();
    CHECK(total == count_boundary_points(p));
  }
}

TEST_CASE("normalized_volume") {
  CHECK(normalized_volume(hull({{1, 0}, {0, 1}, {0, 0}})) == 1);
  CHECK(normalized_volume(p_l(3)) == 18);
  CHECK(normalized_volume(kBigTriangle) == 9);
}

TEST_CASE("canonical_form examples") {
  IntMatrix u{{1, 1}, {0, 1}};
  CHECK(canonical_form(p_l(3)) == canonical_form(apply_matrix(p_l(3), u)));
  auto relisted = hull({{0, 1}, {0, -1}, {3, 1}, {-3, -1}, {3, 2}, {-3, -2}});
  CHECK(canonical_form(p_l(3)) == canonical_form(relisted));
  auto again = polygon_from_columns(canonical_form(p_l(3)));
  CHECK(canonical_form(again) == canonical_form(p_l(3)));
}

TEST_CASE("canonical_form and edge indices under random unimodular maps") {
  std::mt19937 rng(13);
  auto polys = random_polygons(rng, 150);
  for (const auto& p : polys) {
    if (!p.contains_origin_strictly()) continue;
    IntMatrix u = random_unimodular(rng);
    Polygon q = apply_matrix(p, u);
    CHECK(canonical_form(q) == canonical_form(p));
    CHECK(is_isomorphic(p, q));
    std::multiset<Integer> a, b;
    for (const auto& e : edges(p)) a.insert(e.local_index);
    for (const auto& e : edges(q)) b.insert(e.local_index);
    CHECK(a == b);
  }
}

TEST_CASE("is_isomorphic") {
  IntMatrix reflect{{1, 0}, {0, -1}};
  CHECK(is_isomorphic(p_l(3), apply_matrix(p_l(3), reflect)));
  CHECK_FALSE(is_isomorphic(p_l(3), kHexagon));
  CHECK(is_isomorphic(kBigTriangle, hull({{1, 1}, {1, -2}, {-2, 1}})));
  CHECK_FALSE(is_isomorphic(kSquare, kHexagon));
}

TEST_CASE("apply_matrix") {
  CHECK(apply_matrix(p_l(3), IntMatrix::identity(2)) == p_l(3));
  CHECK(is_isomorphic(apply_matrix(kHexagon, IntMatrix{{3, 1}, {0, 1}}), p_l(3)));
  for (long long l : {3, 5, 7, 9})
    for (long long i = 1; i < l; ++i) {
      auto image = apply_matrix(kHexagon, IntMatrix{{l, i}, {0, 1}});
      std::set<LatticeVector> got(image.vertices().begin(), image.vertices().end());
      std::set<LatticeVector> want{{0, 1}, {0, -1}, {l, i + 1}, {-l, -i - 1}, {l, i}, {-l, -i}};
      CHECK(got == want);
    }
  auto flipped = apply_matrix(kFiveTriangle, IntMatrix{{0, 1}, {1, 0}});
  CHECK(normalized_volume(flipped) == normalized_volume(kFiveTriangle));
  CHECK_THROWS_WITH_AS(apply_matrix(kSquare, IntMatrix{{1, 2}, {2, 4}}), doctest::Contains("singular map"),
                       GeometryError);
  CHECK(scaled(kSquare, 2) == hull({{2, 0}, {0, 2}, {-2, 0}, {0, -2}}));
}

TEST_CASE("P_3 restricted to its boundary lattice is the hexagon") {
  auto pts = boundary_points(p_l(3));
  auto lattice = sublattice_of(pts);
  CHECK(lattice.index == 3);
  auto coords = restrict_to_sublattice(p_l(3).vertices(), lattice);
  CHECK(is_isomorphic(convex_hull(coords), kHexagon));
}
