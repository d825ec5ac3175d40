#pragma once

// Exact integer linear algebra for small lattices: vectors of dimension 2 or 3,
// tiny integer matrices, Hermite normal form and sublattices of Z^n.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised on violated preconditions of geometric operations.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floor and ceiling of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

/// Converts to a machine integer, throwing if the value does not fit.
long long to_int64(const Integer& x);

/// Multiplicative inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
Integer inverse_mod(const Integer& a, const Integer& m);

Integer gcd_all(std::span<const Integer> xs);
inline Integer gcd_all(std::initializer_list<Integer> xs) {
  return gcd_all(std::span<const Integer>(xs.begin(), xs.size()));
}

/// Lattice point of Z^2 or Z^3.
class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(Integer x, Integer y) : c_{std::move(x), std::move(y), 0}, dim_{2} {}
  LatticeVector(Integer x, Integer y, Integer z)
      : c_{std::move(x), std::move(y), std::move(z)}, dim_{3} {}
  static LatticeVector zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer& operator[](std::size_t i) { return c_[i]; }
  const Integer& x() const { return c_[0]; }
  const Integer& y() const { return c_[1]; }
  const Integer& z() const { return c_[2]; }

  bool is_zero() const;
  /// gcd of the coordinates.
  Integer content() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);
  /// Exact division of every coordinate; throws if not divisible.
  LatticeVector divided_by(const Integer& k) const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

 private:
  std::array<Integer, 3> c_{};
  std::size_t dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::string to_string(const LatticeVector& v);

bool is_primitive(const LatticeVector& v);
/// v divided by its content; v must be nonzero.
LatticeVector primitive_part(const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);
/// det of the 2x2 matrix with rows a, b.
Integer det2(const LatticeVector& a, const LatticeVector& b);
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);

/// Dense row-major integer matrix. Matrices act on row vectors from the right.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);
  static IntMatrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors.
  static IntMatrix from_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  IntMatrix transpose() const;
  IntMatrix submatrix_rows(std::size_t first, std::size_t count) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  /// Orders first by shape, then lexicographically on the row-major entries.
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t i, std::size_t j);
  /// row i -= k * row j
  void sub_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// v * M for a row vector v of length M.rows().
LatticeVector operator*(const LatticeVector& v, const IntMatrix& m);

Integer determinant(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix U;  // unimodular, U * A = H
  IntMatrix H;  // row-style Hermite normal form
};

/// Row-style Hermite normal form: H = U * A is upper triangular (echelon),
/// pivots are positive and entries above a pivot lie in [0, pivot).
HermiteDecomposition hnf(const IntMatrix& a);

/// H only, skipping the bookkeeping of U.
IntMatrix hnf_matrix(const IntMatrix& a);

struct SublatticeInfo {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // square, rows are basis vectors, in Hermite normal form
  Integer index;

  friend bool operator==(const SublatticeInfo&, const SublatticeInfo&) = default;
  bool contains(const LatticeVector& v) const;
};

/// Sublattice of Z^n generated by the points; they must span Q^n.
SublatticeInfo sublattice_of(std::span<const LatticeVector> points);

/// Coordinates of the points with respect to the sublattice basis.
std::vector<LatticeVector> restrict_to_sublattice(std::span<const LatticeVector> points,
                                                  const SublatticeInfo& lattice);

}  // namespace lrp
