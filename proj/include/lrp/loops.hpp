#pragma once

// l-reflexive loops: cyclic sequences of lattice points with primitive steps,
// consecutive determinants ±l and primitive vertices. They may be non-convex,
// self-intersecting, or wind several times around the origin.

#include "lrp/lattice.hpp"
#include "lrp/polygon.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace lrp {

/// Points are a sequence, not a set: multi-traversals repeat points.
struct Loop {
  std::vector<LatticeVector> points;
  long long index = 0;
};

/// Names the violated loop condition (1), (2) or (3) and the position.
class LoopError : public GeometryError {
 public:
  LoopError(int condition, std::size_t position, const std::string& what);
  int condition() const { return condition_; }
  std::size_t position() const { return position_; }

 private:
  int condition_;
  std::size_t position_;
};

struct LoopMetrics {
  long long length = 0;
  long long winding = 0;
  std::size_t boundary_count = 0;
};

/// Throws LoopError on the first violated condition; fewer than three points
/// are rejected as degenerate.
Loop validate_loop(std::vector<LatticeVector> points, long long l);

/// Boundary lattice points of an l-reflexive polygon, counterclockwise.
Loop loop_of_polygon(const Polygon& p);

long long loop_length(const Loop& loop);
Loop dual_loop(const Loop& loop);
long long winding_number(const Loop& loop);
LoopMetrics metrics(const Loop& loop);
bool twelve_w_check(const Loop& loop);
SublatticeInfo loop_boundary_sublattice(const Loop& loop);

Loop traversed(const Loop& loop, int times);
Loop reversed(const Loop& loop);
/// Image under x -> x·h, validated as a loop of index `new_index`.
Loop map_loop(const Loop& loop, const IntMatrix& h, long long new_index);

/// Equal as cyclic sequences up to rotation and reversal.
bool same_cycle(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b);

/// Depth-first enumeration of l-reflexive loops with pairwise distinct points
/// in [-radius, radius]^2 and at most max_points points. Each cycle is reported
/// once per direction, starting at its lexicographically smallest point.
/// Stops after max_results loops accepted by `keep`.
std::vector<Loop> search_loops(long long l, int radius, std::size_t max_points,
                               const std::function<bool(const Loop&)>& keep, std::size_t max_results);

}  // namespace lrp
