#pragma once

// Three-dimensional lattice polytopes with the origin in the interior, at the
// scale of a handful of vertices: facet and edge incidence, l-reflexivity,
// the scaled dual, the edge-length pairing sum, sublattices generated by
// vertices, edges or boundary points, and weights of lattice simplices.

#include "lrp/lattice.hpp"
#include "lrp/polygon.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lrp {

struct Facet {
  LatticeVector normal;  // primitive outer normal
  Integer local_index;
  std::vector<std::size_t> vertices;
};

struct Edge3 {
  std::size_t tail, head;      // vertex indices
  std::size_t facet_a, facet_b;  // the two facets meeting along the edge
};

struct Polytope3 {
  std::vector<LatticeVector> vertices;  // sorted
  std::vector<Facet> facets;            // sorted by normal
  std::vector<Edge3> edges;
};

/// Hull of the points; throws if they are coplanar or the origin is not
/// strictly interior.
Polytope3 build_polytope3(std::span<const LatticeVector> points);

std::optional<long long> is_l_reflexive_3(const Polytope3& p);
/// lP*, the hull of the facet normals.
Polytope3 dual_scaled_3(const Polytope3& p, long long l);

/// Sum over edges E of the lattice lengths of E and of the edge of lP*
/// spanned by the normals of the two facets at E.
Integer sum_24(const Polytope3& p, long long l);

std::vector<LatticeVector> edge_lattice_points(const Polytope3& p);
std::vector<LatticeVector> boundary_lattice_points(const Polytope3& p);

SublatticeInfo vertex_lattice(const Polytope3& p);
SublatticeInfo edge_lattice(const Polytope3& p);
SublatticeInfo boundary_lattice(const Polytope3& p);

/// Vertices rewritten in coordinates of the sublattice.
Polytope3 restrict_polytope(const Polytope3& p, const SublatticeInfo& lattice);

Polytope3 apply_matrix_3(const Polytope3& p, const IntMatrix& m);

/// Whether some W in GL(3,Z) maps the vertex set of p onto that of q.
bool is_isomorphic_3(const Polytope3& p, const Polytope3& q);

struct SimplexWeights {
  std::vector<Integer> weights;  // positive, coprime, sum of weights[i] * v_i = 0
  Integer multiplicity;          // index of the vertex sublattice
};

/// n+1 vertices of an n-simplex (n = 2, 3) with the origin in its interior.
SimplexWeights simplex_weights(std::span<const LatticeVector> vertices);

/// l divides the multiplicity of an l-reflexive triangle.
bool divides_multiplicity(const Polygon& triangle);

/// Evidence for the vertex-lattice question: is p 1-reflexive after
/// restriction to the lattice generated by its vertices?
bool one_reflexive_on_vertex_lattice(const Polytope3& p);

}  // namespace lrp
