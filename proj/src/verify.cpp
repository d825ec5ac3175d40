#include "lrp/verify.hpp"

#include "lrp/polytope3.hpp"

#include <numeric>
#include <sstream>

namespace lrp {

std::string describe(const LReflexiveRecord& r) { return to_json(r).dump(); }

namespace {

void expect(SuiteReport& rep, bool cond, const std::string& what) {
  ++rep.checked;
  if (!cond) rep.failures.push_back(what);
}

// Runs f, turning exceptions into failures.
template <class F>
void guarded(SuiteReport& rep, const std::string& context, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    ++rep.checked;
    rep.failures.push_back(context + ": " + e.what());
  }
}

const Polygon& dual_of_p2() {
  static const Polygon p = [] {
    std::vector<LatticeVector> v{{-1, -1}, {-1, 2}, {2, -1}};
    return convex_hull(v);
  }();
  return p;
}

Polygon family_polygon(long long l) {
  std::vector<LatticeVector> v{{0, 1}, {0, -1}, {l, 2}, {-l, -2}, {l, 1}, {-l, -1}};
  return convex_hull(v);
}

}  // namespace

SuiteReport verify_twelve(const Classification& c) {
  SuiteReport rep{"twelve", 0, {}};
  for (const auto& [l, records] : c)
    for (const auto& r : records)
      guarded(rep, describe(r), [&] {
        Polygon dual = dual_scaled(r.polygon, l);
        expect(rep, count_boundary_points(r.polygon) + count_boundary_points(dual) == 12,
               "b + b_dual != 12: " + describe(r));
        expect(rep, twelve_check(r), "stored b + b_dual != 12: " + describe(r));
        expect(rep, r.polygon.size() == dual.size(), "vertex counts differ: " + describe(r));
      });
  return rep;
}

SuiteReport verify_duality(const Classification& c) {
  SuiteReport rep{"duality", 0, {}};
  for (const auto& [l, records] : c)
    for (const auto& r : records)
      guarded(rep, describe(r), [&] {
        const std::string who = describe(r);
        expect(rep, r.index == l && is_l_reflexive(r.polygon) == l, "not l-reflexive: " + who);
        Polygon dual = dual_scaled(r.polygon, l);
        expect(rep, is_l_reflexive(dual) == l, "dual not l-reflexive: " + who);
        expect(rep, is_isomorphic(dual, r.dual), "stored dual differs: " + who);
        expect(rep, is_isomorphic(dual_scaled(dual, l), r.polygon), "duality is not an involution: " + who);
        expect(rep, r.self_dual == is_isomorphic(r.polygon, dual), "self-dual flag wrong: " + who);
        expect(rep, r.b == count_boundary_points(r.polygon) && r.b_dual == count_boundary_points(dual),
               "stored boundary counts wrong: " + who);
        expect(rep, r.order == order_of(r.polygon), "stored order wrong: " + who);
      });
  return rep;
}

SuiteReport verify_lattice(const Classification& c) {
  SuiteReport rep{"lattice", 0, {}};
  const auto& sources = reflexive_sources();
  for (const auto& [l, records] : c) {
    if (l > 1)
      expect(rep, static_cast<long long>(records.size()) <= 16 * (euler_phi(l) - 1),
             "more than 16(phi(l)-1) classes at l = " + std::to_string(l));
    for (const auto& r : records)
      guarded(rep, describe(r), [&] {
        const std::string who = describe(r);
        expect(rep, boundary_sublattice(r.polygon).index == l, "boundary sublattice index != l: " + who);
        Polygon dual = dual_scaled(r.polygon, l);
        expect(rep, boundary_sublattice(dual).index == l, "dual boundary sublattice index != l: " + who);
        Polygon q = associated_one_reflexive(r.polygon);
        Polygon q_dual = associated_one_reflexive(dual);
        expect(rep, is_l_reflexive(q) == 1, "associated polygon not 1-reflexive: " + who);
        expect(rep, is_isomorphic(dual_scaled(q, 1), q_dual), "associated duals differ: " + who);
        if (l == 1) return;
        expect(rep, r.source_id >= 1 && r.source_id <= static_cast<int>(sources.size()), "bad source id: " + who);
        const Polygon& src = sources.at(r.source_id - 1);
        expect(rep, is_isomorphic(q, src), "associated polygon is not the source: " + who);
        expect(rep, is_isomorphic(apply_matrix(src, quotient_matrix(l, r.hnf_i)), r.polygon),
               "source image differs: " + who);
        long long j = dual_hnf_parameter(l, r.hnf_i);
        expect(rep, (r.hnf_i * j + 1) % l == 0, "i*j != -1 mod l: " + who);
        expect(rep, is_isomorphic(apply_matrix(dual_scaled(src, 1), quotient_matrix(l, j)), dual),
               "dual is not Q*·(l j; 0 1): " + who);
      });
  }
  return rep;
}

SuiteReport verify_odd(long long max_l, unsigned jobs) {
  SuiteReport rep{"odd", 0, {}};
  for (long long l = 2; l <= max_l; l += 2)
    expect(rep, classify(l, jobs).empty(), "even index has polygons: l = " + std::to_string(l));
  return rep;
}

SuiteReport verify_ehrhart(const Classification& c) {
  SuiteReport rep{"ehrhart", 0, {}};
  for (const auto& [l, records] : c) {
    bool family_found = false;
    const Polygon family = family_polygon(l);
    for (const auto& r : records)
      guarded(rep, describe(r), [&] {
        const std::string who = describe(r);
        const Integer b = count_boundary_points(r.polygon);
        expect(rep, normalized_volume(r.polygon) == l * b, "Vol != l*b: " + who);
        expect(rep, Integer(count_lattice_points(r.polygon)) == (l + 1) / 2 * b + 1, "|P ∩ N| wrong: " + who);
        expect(rep, Integer(count_interior_points(r.polygon)) == (l - 1) / 2 * b + 1, "interior count wrong: " + who);
        expect(rep, b <= 9 && r.polygon.size() <= 6, "corner bounds violated: " + who);
        auto h = hstar(r);
        expect(rep, h == hstar_from_counts(r.polygon), "h* closed form differs from counts: " + who);
        expect(rep, (h.c0 == h.c2) == (l == 1), "h* palindrome criterion fails: " + who);
        expect(rep, ehrhart_quadratic(r.polygon) == ehrhart_from_counts(r.polygon), "Ehrhart polynomial: " + who);
        bool exception = is_isomorphic(r.polygon, dual_of_p2());
        expect(rep, ehrhart_roots_on_line(r.polygon, l) == !exception, "Ehrhart roots: " + who);
        expect(rep, is_ldp_roots_imply_reflexive(r.polygon), "roots on line without reflexivity: " + who);
        expect(rep, 2 * r.order <= l + 1, "order above (l+1)/2: " + who);
        if (r.polygon.size() == 3) expect(rep, divides_multiplicity(r.polygon), "l does not divide mult: " + who);
        if (is_isomorphic(r.polygon, family)) {
          family_found = true;
          expect(rep, r.self_dual && 2 * r.order == l + 1, "P_l is not self-dual of order (l+1)/2: " + who);
        }
      });
    expect(rep, family_found, "P_l missing at l = " + std::to_string(l));
  }
  return rep;
}

std::vector<Loop> nonconvex_loop_fixtures() {
  std::vector<Loop> out = search_loops(
      3, 3, 8, [](const Loop& loop) { return loop_length(loop) == 0 && winding_number(loop) == 1; }, 4);
  auto nonconvex = [](const Loop& loop) {
    for (std::size_t i = 0; i < loop.points.size(); ++i)
      if (det2(loop.points[i], loop.points[(i + 1) % loop.points.size()]) < 0) return true;
    return false;
  };
  auto seeds = search_loops(1, 2, 6, nonconvex, 40);
  for (long long l : {3, 5, 7})
    for (const auto& seed : seeds)
      for (long long i = 1; i < l; ++i) {
        if (std::gcd(l, i) != 1) continue;
        try {
          out.push_back(map_loop(seed, quotient_matrix(l, i), l));
        } catch (const LoopError&) {
        }
      }
  return out;
}

namespace {

void check_loop(SuiteReport& rep, const Loop& loop, const std::string& who) {
  guarded(rep, who, [&] {
    expect(rep, twelve_w_check(loop), "length + dual length != 12 w: " + who);
    Loop dual = dual_loop(loop);
    auto lat = loop_boundary_sublattice(loop);
    auto dual_lat = loop_boundary_sublattice(dual);
    expect(rep, lat.index == loop.index && dual_lat.index == loop.index, "loop sublattice index != l: " + who);
    // Λ of the dual is l times the dual lattice of Λ: all pairings divisible by l.
    bool divisible = true;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        divisible = divisible && dot(lat.basis.row(a), dual_lat.basis.row(b)) % loop.index == 0;
    expect(rep, divisible, "dual sublattice is not l times the dual lattice: " + who);
  });
}

std::string loop_name(const Loop& loop) { return to_json(loop).dump(); }

}  // namespace

SuiteReport verify_loops(const Classification& c) {
  SuiteReport rep{"loops", 0, {}};
  for (const auto& [l, records] : c)
    for (const auto& r : records)
      guarded(rep, describe(r), [&] {
        const std::string who = describe(r);
        Loop loop = loop_of_polygon(r.polygon);
        auto m = metrics(loop);
        expect(rep, m.winding == 1 && m.length == static_cast<long long>(r.b), "convex loop metrics: " + who);
        expect(rep, same_cycle(dual_loop(loop).points, boundary_points(dual_scaled(r.polygon, l))),
               "dual loop is not the boundary of lP*: " + who);
        check_loop(rep, loop, who);
        check_loop(rep, reversed(loop), "reversed " + who);
        for (int k : {2, 3}) {
          Loop multi = traversed(loop, k);
          expect(rep, winding_number(multi) == k && loop_length(multi) == k * m.length,
                 std::to_string(k) + "-fold traversal metrics: " + who);
          check_loop(rep, multi, std::to_string(k) + "-fold " + who);
        }
      });
  auto fixtures = nonconvex_loop_fixtures();
  expect(rep, !fixtures.empty(), "no non-convex fixtures found");
  for (const auto& loop : fixtures) {
    check_loop(rep, loop, loop_name(loop));
    guarded(rep, loop_name(loop), [&] {
      expect(rep, same_cycle(dual_loop(dual_loop(loop)).points, loop.points),
             "dual loop is not an involution: " + loop_name(loop));
    });
  }
  return rep;
}

SuiteReport verify_dim3() {
  SuiteReport rep{"dim3", 0, {}};
  guarded(rep, "tetrahedron family", [&] {
    for (long long l = 1; l <= 10; ++l) {
      std::vector<LatticeVector> v{{-l, -1, 0}, {l, 0, -1}, {0, 1, 0}, {0, 0, 1}};
      auto p = build_polytope3(v);
      long long expected = l % 2 ? l : l / 2;
      expect(rep, is_l_reflexive_3(p) == expected, "family tetrahedron index at l = " + std::to_string(l));
      expect(rep, is_isomorphic_3(dual_scaled_3(dual_scaled_3(p, expected), expected), p),
             "family duality at l = " + std::to_string(l));
    }
  });
  guarded(rep, "2-reflexive tetrahedron", [&] {
    std::vector<LatticeVector> v{{1, 0, 0}, {3, 4, 0}, {5, 0, 8}, {-9, -4, -8}};
    auto p = build_polytope3(v);
    expect(rep, is_l_reflexive_3(p) == 2, "tetrahedron is not 2-reflexive");
    expect(rep, boundary_lattice(p).index == 1, "boundary lattice index != 1");
    expect(rep, edge_lattice(p).index == 4, "edge lattice index != 4");
    expect(rep, vertex_lattice(p).index == 32, "vertex lattice index != 32");
    expect(rep, one_reflexive_on_vertex_lattice(p), "restriction to vertex lattice not 1-reflexive");
    expect(rep, sum_24(p, 2) == 24, "edge pairing sum != 24");
    auto w = simplex_weights(v);
    expect(rep, w.weights == std::vector<Integer>{1, 1, 1, 1} && w.multiplicity == 32, "weights/multiplicity");
    std::vector<LatticeVector> printed_p{{-9, -2, -4}, {1, 0, 0}, {3, 2, 0}, {5, 0, 4}};
    auto p_restricted = restrict_polytope(p, edge_lattice(p));
    expect(rep, is_isomorphic_3(p_restricted, build_polytope3(printed_p)), "restriction to edge lattice");
    expect(rep, is_l_reflexive_3(p_restricted) == 1, "restriction not 1-reflexive");
    auto dual = dual_scaled_3(p, 2);
    expect(rep, is_l_reflexive_3(dual) == 2, "2P* not 2-reflexive");
    expect(rep, edge_lattice(dual).index == 2, "edge lattice of 2P* index != 2");
    std::vector<LatticeVector> printed_q{{-1, 1, 1}, {-1, 1, 2}, {-1, 3, 1}, {3, -5, -4}};
    auto q = restrict_polytope(dual, edge_lattice(dual));
    expect(rep, is_isomorphic_3(q, build_polytope3(printed_q)), "restriction of 2P* to its edge lattice");
    expect(rep, is_l_reflexive_3(q) == 1, "restricted 2P* not 1-reflexive");
    expect(rep, is_isomorphic_3(dual_scaled_3(p_restricted, 1), q), "P'* is not isomorphic to Q");
  });
  guarded(rep, "simplex S", [&] {
    std::vector<LatticeVector> v{{-8, -12, -17}, {4, 0, 1}, {0, 4, 3}, {0, 0, 1}};
    auto s = build_polytope3(v);
    expect(rep, is_l_reflexive_3(s) == 2, "S is not 2-reflexive");
    expect(rep, sum_24(s, 2) == 28, "edge pairing sum of S != 28");
    expect(rep, edge_lattice(s).index == 2, "edge lattice of S index != 2");
    auto restricted = restrict_polytope(s, edge_lattice(s));
    expect(rep, is_l_reflexive_3(restricted) != 1, "S restricted to its edge lattice is reflexive");
    IntMatrix h{{4, 0, 1}, {0, 4, 3}, {0, 0, 1}};
    std::vector<LatticeVector> t{{-2, -3, -6}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    expect(rep, is_isomorphic_3(apply_matrix_3(build_polytope3(t), h), s), "S != T·H");
  });
  return rep;
}

}  // namespace lrp
