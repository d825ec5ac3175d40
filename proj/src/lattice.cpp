#include "lrp/lattice.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace lrp {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw GeometryError("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer mod_floor(const Integer& a, const Integer& m) { return a - m * floor_div(a, m); }

long long to_int64(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return x.convert_to<long long>();
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  // extended Euclid on (a mod m, m)
  Integer r0 = mod_floor(a, m), r1 = m;
  Integer s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer q = floor_div(r0, r1);
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != 1) throw GeometryError("not invertible modulo " + m.str());
  return mod_floor(s0, m);
}

Integer gcd_all(std::span<const Integer> xs) {
  if (xs.empty()) throw GeometryError("empty sequence");
  Integer g = 0;
  for (const auto& x : xs) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

// ---------------------------------------------------------------------------

LatticeVector LatticeVector::zero(std::size_t dim) {
  if (dim == 2) return {0, 0};
  if (dim == 3) return {0, 0, 0};
  throw GeometryError("lattice dimension must be 2 or 3");
}

bool LatticeVector::is_zero() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Integer LatticeVector::content() const {
  return gcd_all(std::span<const Integer>(c_.data(), dim_));
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (dim_ != o.dim_) throw GeometryError("dimension mismatch");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (dim_ != o.dim_) throw GeometryError("dimension mismatch");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  LatticeVector r = v;
  for (std::size_t i = 0; i < v.dim_; ++i) r.c_[i] *= k;
  return r;
}

LatticeVector LatticeVector::divided_by(const Integer& k) const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (r.c_[i] % k != 0) throw GeometryError("inexact division of " + to_string(*this));
    r.c_[i] /= k;
  }
  return r;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (a.c_[i] > b.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

bool is_primitive(const LatticeVector& v) { return !v.is_zero() && v.content() == 1; }

LatticeVector primitive_part(const LatticeVector& v) {
  if (v.is_zero()) throw GeometryError("zero vector has no primitive part");
  return v.divided_by(v.content());
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw GeometryError("dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a.x() * b.y() - a.y() * b.x(); }

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, a_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw GeometryError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows) {
  if (rows.empty()) throw GeometryError("empty sequence");
  IntMatrix m(rows.size(), rows[0].dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.cols_) throw GeometryError("dimension mismatch");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  if (cols_ == 2) return {(*this)(r, 0), (*this)(r, 1)};
  if (cols_ == 3) return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)};
  throw GeometryError("row is not a lattice vector of dimension 2 or 3");
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix_rows(std::size_t first, std::size_t count) const {
  IntMatrix s(count, cols_);
  std::copy_n(a_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, s.a_.begin());
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw GeometryError("matrix shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] < b.a_[i]) return std::strong_ordering::less;
    if (a.a_[i] > b.a_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::sub_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= k * (*this)(j, c);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

LatticeVector operator*(const LatticeVector& v, const IntMatrix& m) {
  if (v.dim() != m.rows()) throw GeometryError("matrix shape mismatch");
  LatticeVector r = LatticeVector::zero(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t k = 0; k < m.rows(); ++k) r[c] += v[k] * m(k, c);
  return r;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw GeometryError("determinant of a non-square matrix");
  // Bareiss fraction-free elimination
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : sign * a(n - 1, n - 1);
}

namespace {

template <bool TrackU>
HermiteDecomposition hnf_impl(const IntMatrix& a) {
  HermiteDecomposition out{TrackU ? IntMatrix::identity(a.rows()) : IntMatrix{}, a};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid down column c until a single nonzero entry remains at row r.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == m) break;
      h.swap_rows(r, best);
      if constexpr (TrackU) u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.sub_row_multiple(i, r, q);
        if constexpr (TrackU) u.sub_row_multiple(i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if constexpr (TrackU) u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.sub_row_multiple(i, r, q);
      if constexpr (TrackU) u.sub_row_multiple(i, r, q);
    }
    ++r;
  }
  return out;
}

}  // namespace

HermiteDecomposition hnf(const IntMatrix& a) { return hnf_impl<true>(a); }

IntMatrix hnf_matrix(const IntMatrix& a) { return std::move(hnf_impl<false>(a).H); }

bool SublatticeInfo::contains(const LatticeVector& v) const {
  try {
    std::vector<LatticeVector> one{v};
    restrict_to_sublattice(one, *this);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

SublatticeInfo sublattice_of(std::span<const LatticeVector> points) {
  if (points.empty()) throw GeometryError("degenerate generator set");
  const std::size_t n = points[0].dim();
  IntMatrix h = hnf_matrix(IntMatrix::from_rows(points));
  // Full rank iff the first n rows carry n pivots on the diagonal.
  if (h.rows() < n) throw GeometryError("degenerate generator set");
  for (std::size_t i = 0; i < n; ++i)
    if (h(i, i) == 0) throw GeometryError("degenerate generator set");
  SublatticeInfo info{n, h.submatrix_rows(0, n), 1};
  for (std::size_t i = 0; i < n; ++i) info.index *= h(i, i);
  return info;
}

std::vector<LatticeVector> restrict_to_sublattice(std::span<const LatticeVector> points,
                                                  const SublatticeInfo& lattice) {
  const IntMatrix& b = lattice.basis;
  const std::size_t n = lattice.ambient_dim;
  std::vector<LatticeVector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != n) throw GeometryError("dimension mismatch");
    // Solve c * B = p; B is upper triangular, so forward substitution by column.
    LatticeVector c = LatticeVector::zero(n);
    for (std::size_t j = 0; j < n; ++j) {
      Integer rest = p[j];
      for (std::size_t k = 0; k < j; ++k) rest -= c[k] * b(k, j);
      if (rest % b(j, j) != 0) throw GeometryError("point not in sublattice");
      c[j] = rest / b(j, j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lrp
