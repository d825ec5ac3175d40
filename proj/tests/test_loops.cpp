#include "doctest.h"

#include "lrp/loops.hpp"
#include "lrp/reflexive.hpp"
#include "lrp/verify.hpp"

using namespace lrp;

namespace {

Polygon hull(std::vector<LatticeVector> pts) { return convex_hull(pts); }
Polygon p_l(long long l) { return hull({{0, 1}, {0, -1}, {l, 2}, {-l, -2}, {l, 1}, {-l, -1}}); }

const Polygon kHexagon = hull({{0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, 0}, {-1, 0}});
const Polygon kBigTriangle = hull({{-1, -1}, {-1, 2}, {2, -1}});
const Polygon kSmallTriangle = hull({{1, 0}, {0, 1}, {-1, -1}});
const Polygon kFiveTriangle = hull({{-7, -10}, {2, 5}, {1, 0}});

// A 3-reflexive loop of length 0 and winding 1, found by bounded search.
const std::vector<LatticeVector> kLengthZero{{-3, -1}, {-3, 0}, {-3, 1}, {0, -1}, {3, 1}, {3, 0}, {3, -1}, {0, 1}};
const std::vector<LatticeVector> kLengthZeroDual{{-1, 0}, {-2, -3}, {-1, -3}, {0, -3}, {1, -3}, {2, -3},
                                                 {1, 0},  {2, 3},   {1, 3},   {0, 3},  {-1, 3}, {-2, 3}};

}  // namespace

TEST_CASE("validate_loop") {
  CHECK_NOTHROW(validate_loop(boundary_points(p_l(3)), 3));
  CHECK_NOTHROW(validate_loop(boundary_points(kBigTriangle), 1));
  try {
    validate_loop({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 2);
    FAIL("expected a loop error");
  } catch (const LoopError& e) {
    CHECK(e.condition() == 2);
    CHECK(e.position() == 0);
    CHECK(std::string(e.what()).find("condition (2)") != std::string::npos);
  }
  try {
    validate_loop({{2, 0}, {0, 1}, {-2, -1}}, 2);
    FAIL("expected a loop error");
  } catch (const LoopError& e) {
    CHECK(e.condition() == 1);
  }
  try {
    // Primitive steps and determinants 2, but the vertex (0,2) is imprimitive.
    validate_loop({{1, 0}, {0, 2}, {-1, 0}, {0, -2}}, 2);
    FAIL("expected a loop error");
  } catch (const LoopError& e) {
    CHECK(e.condition() == 3);
  }
  CHECK_THROWS_WITH_AS(validate_loop({{1, 0}, {-1, 0}}, 1), doctest::Contains("degenerate loop"), GeometryError);
}

TEST_CASE("loop_length") {
  CHECK(loop_length(loop_of_polygon(p_l(3))) == 6);
  CHECK(loop_length(loop_of_polygon(kBigTriangle)) == 9);
  CHECK(loop_length(traversed(loop_of_polygon(kHexagon), 2)) == 12);
}

TEST_CASE("dual_loop") {
  auto d3 = dual_loop(loop_of_polygon(p_l(3)));
  CHECK(d3.points.size() == 6);
  CHECK(same_cycle(d3.points, boundary_points(hull({{1, 0}, {-1, 0}, {2, -3}, {-2, 3}, {1, -3}, {-1, 3}}))));
  auto dt = dual_loop(loop_of_polygon(kBigTriangle));
  CHECK(same_cycle(dt.points, {{0, -1}, {1, 1}, {-1, 0}}));
  CHECK(is_isomorphic(convex_hull(dt.points), kSmallTriangle));
  auto twice = dual_loop(traversed(loop_of_polygon(kHexagon), 2));
  CHECK(twice.points.size() == 12);
  CHECK(same_cycle(twice.points, traversed(loop_of_polygon(dual_scaled(kHexagon, 1)), 2).points));
}

TEST_CASE("winding_number") {
  for (const auto& r : classify(5)) CHECK(winding_number(loop_of_polygon(r.polygon)) == 1);
  CHECK(winding_number(traversed(loop_of_polygon(kHexagon), 2)) == 2);
  CHECK(winding_number(reversed(loop_of_polygon(p_l(3)))) == -1);
  Loop with_origin{{{0, 0}, {1, 0}, {0, 1}}, 1};
  CHECK_THROWS_AS(winding_number(with_origin), GeometryError);
}

TEST_CASE("twelve_w_check") {
  auto l3 = loop_of_polygon(p_l(3));
  CHECK(loop_length(l3) + loop_length(dual_loop(l3)) == 12);
  CHECK(twelve_w_check(l3));
  CHECK(twelve_w_check(loop_of_polygon(kBigTriangle)));
  auto hex2 = traversed(loop_of_polygon(kHexagon), 2);
  CHECK(loop_length(hex2) + loop_length(dual_loop(hex2)) == 24);
  CHECK(twelve_w_check(hex2));
}

TEST_CASE("loop_boundary_sublattice") {
  for (const auto& q : reflexive_sources()) CHECK(loop_boundary_sublattice(loop_of_polygon(q)).index == 1);
  CHECK(loop_boundary_sublattice(loop_of_polygon(p_l(3))).index == 3);
  CHECK(loop_boundary_sublattice(loop_of_polygon(kFiveTriangle)).index == 5);
}

TEST_CASE("length-zero loop fixture") {
  auto loop = validate_loop(kLengthZero, 3);
  CHECK(loop_length(loop) == 0);
  CHECK(winding_number(loop) == 1);
  auto dual = dual_loop(loop);
  CHECK(loop_length(dual) == 12);
  CHECK(dual.points.size() == 12);
  CHECK(same_cycle(dual.points, kLengthZeroDual));
  CHECK(same_cycle(dual_loop(dual).points, loop.points));
  CHECK(twelve_w_check(loop));
  CHECK(loop_boundary_sublattice(loop).index == 3);
  CHECK(loop_boundary_sublattice(dual).index == 3);
}

TEST_CASE("bounded search finds the length-zero loop") {
  auto found = search_loops(
      3, 3, 8, [](const Loop& l) { return loop_length(l) == 0 && winding_number(l) == 1; }, 100);
  REQUIRE_FALSE(found.empty());
  bool fixture = false;
  for (const auto& l : found) fixture = fixture || same_cycle(l.points, kLengthZero);
  CHECK(fixture);
}

TEST_CASE("12w on every small 1-reflexive loop") {
  std::size_t count = 0;
  auto loops = search_loops(1, 2, 7, [](const Loop&) { return true; }, 1000000);
  for (const auto& l : loops) {
    ++count;
    CHECK(twelve_w_check(l));
  }
  CHECK(count > 1000);
}

TEST_CASE("dual loop is an involution on fixtures") {
  auto fixtures = nonconvex_loop_fixtures();
  REQUIRE(fixtures.size() > 10);
  bool some_nonconvex = false;
  for (const auto& l : fixtures) {
    CHECK(same_cycle(dual_loop(dual_loop(l)).points, l.points));
    CHECK(twelve_w_check(l));
    CHECK(loop_boundary_sublattice(l).index == l.index);
    for (std::size_t i = 0; i < l.points.size(); ++i)
      some_nonconvex = some_nonconvex || det2(l.points[i], l.points[(i + 1) % l.points.size()]) < 0;
  }
  CHECK(some_nonconvex);
}

TEST_CASE("traversals") {
  for (long long l : {1, 3, 5, 7})
    for (const auto& r : classify(l)) {
      auto loop = loop_of_polygon(r.polygon);
      for (int k : {2, 3}) {
        auto multi = traversed(loop, k);
        CHECK(loop_length(multi) == k * loop_length(loop));
        CHECK(winding_number(multi) == k);
        CHECK(twelve_w_check(multi));
      }
    }
}

TEST_CASE("map_loop") {
  auto hex = loop_of_polygon(kHexagon);
  auto image = map_loop(hex, quotient_matrix(3, 1), 3);
  CHECK(same_cycle(image.points, boundary_points(apply_matrix(kHexagon, quotient_matrix(3, 1)))));
  CHECK_THROWS_AS(map_loop(hex, quotient_matrix(3, 1), 1), LoopError);
}

TEST_CASE("same_cycle") {
  std::vector<LatticeVector> a{{1, 0}, {0, 1}, {-1, -1}};
  std::vector<LatticeVector> rotated{{0, 1}, {-1, -1}, {1, 0}};
  std::vector<LatticeVector> reflected{{-1, -1}, {0, 1}, {1, 0}};
  std::vector<LatticeVector> other{{1, 0}, {0, 1}, {-1, 0}};
  CHECK(same_cycle(a, rotated));
  CHECK(same_cycle(a, reflected));
  CHECK_FALSE(same_cycle(a, other));
}
