#include "doctest.h"

#include "lrp/polytope3.hpp"

#include <set>

using namespace lrp;

namespace {

using Pts = std::vector<LatticeVector>;

Polytope3 build(Pts pts) { return build_polytope3(pts); }

Polytope3 family(long long l) { return build({{-l, -1, 0}, {l, 0, -1}, {0, 1, 0}, {0, 0, 1}}); }

const Pts kOctahedron{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
const Pts kTetrahedron{{1, 0, 0}, {3, 4, 0}, {5, 0, 8}, {-9, -4, -8}};
const Pts kS{{-8, -12, -17}, {4, 0, 1}, {0, 4, 3}, {0, 0, 1}};

}  // namespace

TEST_CASE("build_polytope3") {
  auto oct = build(kOctahedron);
  CHECK(oct.vertices.size() == 6);
  CHECK(oct.facets.size() == 8);
  CHECK(oct.edges.size() == 12);
  CHECK(family(3).facets.size() == 4);
  auto tet = build(kTetrahedron);
  CHECK(tet.vertices.size() == 4);
  CHECK(tet.facets.size() == 4);
  CHECK(tet.edges.size() == 6);

  auto with_interior = kOctahedron;
  with_interior.push_back({0, 0, 0});
  CHECK(build(with_interior).vertices.size() == 6);

  CHECK_THROWS_WITH_AS(build({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}), doctest::Contains("degenerate point set"),
                       GeometryError);
  CHECK_THROWS_WITH_AS(build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), doctest::Contains("origin not interior"),
                       GeometryError);
}

TEST_CASE("facet incidence") {
  for (const auto& pts : {kOctahedron, kTetrahedron, kS}) {
    auto p = build(pts);
    for (const auto& f : p.facets) {
      CHECK(is_primitive(f.normal));
      std::set<std::size_t> on(f.vertices.begin(), f.vertices.end());
      for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        if (on.count(v)) CHECK(dot(f.normal, p.vertices[v]) == f.local_index);
        else CHECK(dot(f.normal, p.vertices[v]) < f.local_index);
      }
    }
    for (const auto& e : p.edges) CHECK(e.facet_a != e.facet_b);
  }
}

TEST_CASE("is_l_reflexive_3") {
  CHECK(is_l_reflexive_3(family(3)) == 3);
  CHECK(is_l_reflexive_3(family(4)) == 2);
  CHECK(is_l_reflexive_3(build(kTetrahedron)) == 2);
  CHECK(is_l_reflexive_3(build(kOctahedron)) == 1);
  for (long long l = 1; l <= 10; ++l) CHECK(is_l_reflexive_3(family(l)) == (l % 2 ? l : l / 2));
  CHECK_FALSE(is_l_reflexive_3(build({{2, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}))
                  .has_value());
}

TEST_CASE("dual_scaled_3") {
  auto cube = dual_scaled_3(build(kOctahedron), 1);
  std::set<LatticeVector> got(cube.vertices.begin(), cube.vertices.end());
  std::set<LatticeVector> want;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) want.insert({x, y, z});
  CHECK(got == want);

  auto d3 = dual_scaled_3(family(3), 3);
  std::set<LatticeVector> dv(d3.vertices.begin(), d3.vertices.end());
  CHECK(dv == std::set<LatticeVector>{{2, 3, 3}, {-2, 3, 3}, {2, -9, 3}, {-2, 3, -9}});
  for (const auto& y : d3.vertices)
    for (const auto& x : family(3).vertices) CHECK(dot(y, x) <= 3);
  CHECK(is_isomorphic_3(d3, build({{-2, -3, -3}, {2, -3, -3}, {-2, 9, -3}, {2, -3, 9}})));

  auto d = dual_scaled_3(build(kTetrahedron), 2);
  CHECK(is_l_reflexive_3(d) == 2);
  CHECK(is_isomorphic_3(dual_scaled_3(d, 2), build(kTetrahedron)));
  for (long long l = 1; l <= 9; l += 2)
    CHECK(is_isomorphic_3(dual_scaled_3(dual_scaled_3(family(l), l), l), family(l)));
  CHECK_THROWS_WITH_AS(dual_scaled_3(build(kTetrahedron), 1), doctest::Contains("not l-reflexive"), GeometryError);
}

TEST_CASE("sum_24") {
  CHECK(sum_24(build(kOctahedron), 1) == 24);
  CHECK(sum_24(dual_scaled_3(build(kOctahedron), 1), 1) == 24);
  CHECK(sum_24(build(kTetrahedron), 2) == 24);
  CHECK(sum_24(build(kS), 2) == 28);
  CHECK_THROWS_AS(sum_24(build(kS), 1), GeometryError);
  IntMatrix w{{1, 1, 0}, {0, 1, 0}, {2, 3, 1}};
  CHECK(sum_24(apply_matrix_3(build(kS), w), 2) == 28);
  CHECK(sum_24(apply_matrix_3(build(kTetrahedron), w), 2) == 24);
}

TEST_CASE("sublattices of the 2-reflexive tetrahedron") {
  auto p = build(kTetrahedron);
  CHECK(boundary_lattice(p).index == 1);
  CHECK(edge_lattice(p).index == 4);
  CHECK(vertex_lattice(p).index == 32);
  CHECK(edge_lattice(dual_scaled_3(p, 2)).index == 2);
  CHECK(edge_lattice(build(kS)).index == 2);
}

TEST_CASE("restrict_polytope") {
  auto p = build(kTetrahedron);
  auto p_prime = restrict_polytope(p, edge_lattice(p));
  CHECK(is_isomorphic_3(p_prime, build({{-9, -2, -4}, {1, 0, 0}, {3, 2, 0}, {5, 0, 4}})));
  CHECK(is_l_reflexive_3(p_prime) == 1);

  auto d = dual_scaled_3(p, 2);
  auto q = restrict_polytope(d, edge_lattice(d));
  CHECK(is_isomorphic_3(q, build({{-1, 1, 1}, {-1, 1, 2}, {-1, 3, 1}, {3, -5, -4}})));
  CHECK(is_l_reflexive_3(q) == 1);
  CHECK(is_isomorphic_3(dual_scaled_3(p_prime, 1), q));

  auto s = build(kS);
  CHECK(is_l_reflexive_3(restrict_polytope(s, edge_lattice(s))) != 1);

  CHECK_THROWS_AS(restrict_polytope(build(kOctahedron), edge_lattice(p)), GeometryError);
}

TEST_CASE("is_isomorphic_3") {
  IntMatrix w{{1, 1, 0}, {0, 1, 0}, {2, 3, 1}};
  CHECK(is_isomorphic_3(apply_matrix_3(build(kTetrahedron), w), build(kTetrahedron)));
  CHECK_FALSE(is_isomorphic_3(build(kTetrahedron), build(kS)));
  CHECK_FALSE(is_isomorphic_3(family(3), family(5)));
  IntMatrix h{{4, 0, 1}, {0, 4, 3}, {0, 0, 1}};
  CHECK(is_isomorphic_3(apply_matrix_3(build({{-2, -3, -6}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), h), build(kS)));
  CHECK_THROWS_WITH_AS(apply_matrix_3(build(kS), IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}),
                       doctest::Contains("singular map"), GeometryError);
}

TEST_CASE("simplex_weights") {
  Pts tri{{2, -1}, {-1, 2}, {-1, -1}};
  auto w = simplex_weights(tri);
  CHECK(w.weights == std::vector<Integer>{1, 1, 1});
  CHECK(w.multiplicity == 3);

  Pts five{{-7, -10}, {2, 5}, {1, 0}};
  auto w5 = simplex_weights(five);
  CHECK(std::multiset<Integer>(w5.weights.begin(), w5.weights.end()) == std::multiset<Integer>{1, 2, 3});
  // The vertices generate (1,0), (0,5).
  CHECK(w5.multiplicity == 5);
  CHECK(w5.multiplicity % 5 == 0);
  LatticeVector sum = LatticeVector::zero(2);
  for (std::size_t i = 0; i < five.size(); ++i) sum += w5.weights[i] * five[i];
  CHECK(sum.is_zero());

  auto wt = simplex_weights(kTetrahedron);
  CHECK(wt.weights == std::vector<Integer>{1, 1, 1, 1});
  CHECK(wt.multiplicity == 32);

  Pts not_around{{1, 0}, {0, 1}, {1, 1}};
  CHECK_THROWS_AS(simplex_weights(not_around), GeometryError);
  Pts too_many{{1, 0}, {0, 1}, {-1, -1}, {-1, 0}};
  CHECK_THROWS_AS(simplex_weights(too_many), GeometryError);
}

TEST_CASE("divides_multiplicity") {
  CHECK(divides_multiplicity(convex_hull(Pts{{-7, -10}, {2, 5}, {1, 0}})));
  CHECK(divides_multiplicity(convex_hull(Pts{{-1, -1}, {-1, 2}, {2, -1}})));
  CHECK(divides_multiplicity(convex_hull(Pts{{1, 0}, {0, 1}, {-1, -1}})));
  CHECK_THROWS_WITH_AS(divides_multiplicity(convex_hull(Pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1}})),
                       doctest::Contains("not a triangle"), GeometryError);
  CHECK_THROWS_AS(divides_multiplicity(convex_hull(Pts{{1, 0}, {0, 1}, {-3, -5}})), GeometryError);
}

TEST_CASE("vertex-lattice evidence") {
  CHECK(one_reflexive_on_vertex_lattice(build(kTetrahedron)));
  CHECK(one_reflexive_on_vertex_lattice(build(kOctahedron)));
}
