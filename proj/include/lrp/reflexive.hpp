#pragma once

// l-reflexive polygons: recognition, scaled duality, classification through
// Hermite normal forms over the sixteen 1-reflexive polygons, and the
// invariants attached to each class (boundary count of the dual, boundary
// sublattice, order, h*-vector, Ehrhart roots, 3k-hexagons).

#include "lrp/lattice.hpp"
#include "lrp/polygon.hpp"

#include <optional>
#include <vector>

namespace lrp {

/// Origin strictly interior and every vertex primitive.
bool is_ldp(const Polygon& p);

/// lcm of the local indices; the origin must be strictly interior.
Integer gorenstein_index(const Polygon& p);

/// The common local index l if p is an LDP polygon all of whose edges have
/// local index l.
std::optional<long long> is_l_reflexive(const Polygon& p);

/// lP*, the hull of the primitive outer edge normals of an l-reflexive p.
Polygon dual_scaled(const Polygon& p, long long l);

/// Brute-force enumeration of the polygons whose only interior lattice point
/// is the origin, one per isomorphism class, grown from small triangles.
/// Each representative Q is rebased so that (0,1) is a vertex of Q and of Q*.
std::vector<Polygon> enumerate_1_reflexive();

/// The sixteen normalized representatives, computed once. Index k holds the
/// polygon with source id k + 1.
const std::vector<Polygon>& reflexive_sources();

/// Rebases a 1-reflexive polygon so (0,1) is a vertex of it and of its dual.
Polygon normalize_source(const Polygon& q);

/// 1-based source id of the polygon isomorphic to q, or 0.
int source_id_of(const Polygon& q);

/// (l i; 0 1)
IntMatrix quotient_matrix(long long l, long long i);

/// The j with i*j = -1 (mod l), 0 <= j < l, so that lP* comes from Q* via (l j; 0 1).
long long dual_hnf_parameter(long long l, long long i);

long long euler_phi(long long n);

struct LReflexiveRecord {
  Polygon polygon;     // vertex cycle read off the canonical form
  long long index = 0; // l
  Polygon dual;        // lP*
  int source_id = 0;   // 1..16
  long long hnf_i = 0; // 0 for l = 1
  std::size_t b = 0;
  std::size_t b_dual = 0;
  bool self_dual = false;
  long long order = 0;
};

/// Builds the record for an l-reflexive polygon with known provenance.
LReflexiveRecord make_record(const Polygon& p, long long l, int source_id, long long hnf_i);

/// One record per isomorphism class of l-reflexive polygons, sorted by
/// canonical form. Candidates Q·(l i; 0 1) are tested on `jobs` threads;
/// the result does not depend on `jobs`.
std::vector<LReflexiveRecord> classify(long long l, unsigned jobs = 1);

/// Sublattice generated by the boundary lattice points; p must be l-reflexive.
SublatticeInfo boundary_sublattice(const Polygon& p);

/// p rewritten in coordinates of its boundary sublattice.
Polygon associated_one_reflexive(const Polygon& p);

bool twelve_check(const LReflexiveRecord& r);

/// min{k > 0 : int(P/k) ∩ Z^2 = {0}}
long long order_of(const Polygon& p);

struct HStarVector {
  Integer c0, c1, c2;
  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// Closed form in terms of l and b.
HStarVector hstar(const LReflexiveRecord& r);
/// From the lattice point counts of P and 2P.
HStarVector hstar_from_counts(const Polygon& p);

struct EhrhartQuadratic {
  Rational a2, a1, a0;  // L_P(m) = a2 m^2 + a1 m + a0
  friend bool operator==(const EhrhartQuadratic&, const EhrhartQuadratic&) = default;
};

/// From volume and boundary count.
EhrhartQuadratic ehrhart_quadratic(const Polygon& p);
/// Interpolated through L(0), L(1), L(2).
EhrhartQuadratic ehrhart_from_counts(const Polygon& p);

/// Whether both roots of L_P have real part exactly -1/(2l). Decided
/// symbolically: Vol = l*b and b^2 - 8lb <= 0.
bool ehrhart_roots_on_line(const Polygon& p, long long l);

/// False only if p has its Ehrhart roots on Re z = -1/(2l), l the Gorenstein
/// index, without being l-reflexive.
bool is_ldp_roots_imply_reflexive(const Polygon& p);

/// Smallest i of each isomorphism class of 3k-reflexive hexagons Q·(3k i; 0 1).
std::vector<long long> hexagon_classes_3k(long long k);

/// Every 3k-reflexive polygon is a self-dual hexagon coming from the
/// centrally symmetric 1-reflexive hexagon, and the count matches
/// hexagon_classes_3k.
bool verify_3k_structure(long long k, unsigned jobs = 1);

/// Source id of conv{±(0,1), ±(1,1), ±(1,0)}.
int hexagon_source_id();

}  // namespace lrp
