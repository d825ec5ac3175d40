#pragma once

// Invariant suites run by `lrp verify`. Each suite checks every record (or
// fixture) and collects a line per counterexample.

#include "lrp/io.hpp"
#include "lrp/loops.hpp"

#include <string>
#include <vector>

namespace lrp {

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// b + b_dual = 12 and equal vertex counts.
SuiteReport verify_twelve(const Classification& c);
/// lP* is l-reflexive, l(lP*)* ≅ P, and the stored dual fields agree.
SuiteReport verify_duality(const Classification& c);
/// Boundary sublattice of index l, associated 1-reflexive pair, dual HNF
/// parameter with i*j = -1 (mod l), and the 16(phi(l)-1) class bound.
SuiteReport verify_lattice(const Classification& c);
/// classify(l) is empty for every even l <= max_l.
SuiteReport verify_odd(long long max_l, unsigned jobs);
/// Volume, lattice points, h*-vector, Ehrhart roots and the order bound.
SuiteReport verify_ehrhart(const Classification& c);
/// 12·w for convex loops of the records, their 2- and 3-fold traversals,
/// and the non-convex fixtures.
SuiteReport verify_loops(const Classification& c);
/// The three-dimensional examples.
SuiteReport verify_dim3();

/// Non-convex loops found by bounded search: 3-reflexive loops of length 0
/// and winding 1, plus non-convex 1-reflexive loops pushed through
/// (l i; 0 1) for l = 3, 5, 7 and kept when they validate.
std::vector<Loop> nonconvex_loop_fixtures();

std::string describe(const LReflexiveRecord& r);

}  // namespace lrp
