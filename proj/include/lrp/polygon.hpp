#pragma once

// Convex lattice polygons: hulls, edge data, lattice point enumeration,
// normalized volume and a canonical form for linear unimodular equivalence.

#include "lrp/lattice.hpp"

#include <span>
#include <vector>

namespace lrp {

/// Strictly convex lattice polygon, vertices in counterclockwise order.
class Polygon {
 public:
  Polygon() = default;
  /// Validates that the cycle is strictly convex and counterclockwise.
  explicit Polygon(std::vector<LatticeVector> ccw_vertices);

  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticeVector& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  bool contains_origin_strictly() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<LatticeVector> vertices_;
};

struct EdgeData {
  LatticeVector tail;
  LatticeVector head;
  LatticeVector normal;  // primitive outer normal
  Integer local_index;   // <normal, tail> = <normal, head>
  Integer lattice_length;
};

/// Outer half-plane <normal, x> <= offset of one edge; no condition on the origin.
struct HalfPlane {
  LatticeVector normal;
  Integer offset;
};

Polygon convex_hull(std::span<const LatticeVector> points);

std::vector<HalfPlane> half_planes(const Polygon& p);
/// Edge data in cyclic order; the origin must be strictly interior.
std::vector<EdgeData> edges(const Polygon& p);

std::vector<LatticeVector> boundary_points(const Polygon& p);
std::vector<LatticeVector> interior_points(const Polygon& p);
std::size_t count_boundary_points(const Polygon& p);
std::size_t count_interior_points(const Polygon& p);
/// |P ∩ Z^2|
std::size_t count_lattice_points(const Polygon& p);

/// Twice the Euclidean area.
Integer normalized_volume(const Polygon& p);

/// Complete invariant under P -> P·U, U in GL(2,Z): the smallest Hermite
/// normal form over all rotations and reflections of the vertex cycle,
/// taken as the 2 x m matrix whose columns are the vertices.
IntMatrix canonical_form(const Polygon& p);
bool is_isomorphic(const Polygon& p, const Polygon& q);
/// The polygon whose vertex cycle is the column sequence of a canonical form.
Polygon polygon_from_columns(const IntMatrix& m);

Polygon apply_matrix(const Polygon& p, const IntMatrix& h);
Polygon scaled(const Polygon& p, const Integer& k);

}  // namespace lrp
