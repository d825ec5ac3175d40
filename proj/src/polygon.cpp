#include "lrp/polygon.hpp"

#include <algorithm>

namespace lrp {

namespace {

Integer turn(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return det2(b - a, c - b);
}

Integer signed_double_area(std::span<const LatticeVector> cycle) {
  Integer s = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) s += det2(cycle[i], cycle[(i + 1) % cycle.size()]);
  return s;
}

}  // namespace

Polygon::Polygon(std::vector<LatticeVector> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
  const std::size_t m = vertices_.size();
  if (m < 3) throw GeometryError("degenerate hull");
  for (const auto& v : vertices_)
    if (v.dim() != 2) throw GeometryError("polygon vertices must be two-dimensional");
  for (std::size_t i = 0; i < m; ++i)
    if (turn(vertices_[i], vertices_[(i + 1) % m], vertices_[(i + 2) % m]) <= 0)
      throw GeometryError("vertex cycle is not strictly convex and counterclockwise");
}

bool Polygon::contains_origin_strictly() const {
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i)
    if (det2(vertices_[i], vertices_[(i + 1) % m]) <= 0) return false;
  return true;
}

Polygon convex_hull(std::span<const LatticeVector> points) {
  std::vector<LatticeVector> pts(points.begin(), points.end());
  for (const auto& p : pts)
    if (p.dim() != 2) throw GeometryError("polygon vertices must be two-dimensional");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw GeometryError("degenerate hull");

  // Andrew's monotone chain, dropping collinear points.
  std::vector<LatticeVector> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && det2(hull[hull.size() - 1] - hull[hull.size() - 2], p - hull.back()) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower &&
           det2(hull[hull.size() - 1] - hull[hull.size() - 2], *it - hull.back()) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) throw GeometryError("degenerate hull");
  return Polygon(std::move(hull));
}

std::vector<HalfPlane> half_planes(const Polygon& p) {
  std::vector<HalfPlane> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    LatticeVector d = p.vertex(i + 1) - p.vertex(i);
    LatticeVector n = primitive_part(LatticeVector(d.y(), -d.x()));
    Integer off = dot(n, p.vertex(i));
    out.push_back({std::move(n), std::move(off)});
  }
  return out;
}

std::vector<EdgeData> edges(const Polygon& p) {
  std::vector<EdgeData> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LatticeVector& a = p.vertex(i);
    const LatticeVector& b = p.vertex(i + 1);
    LatticeVector d = b - a;
    Integer len = d.content();
    LatticeVector n(d.y() / len, -d.x() / len);
    Integer li = dot(n, a);
    if (li <= 0) throw GeometryError("origin not interior");
    out.push_back({a, b, std::move(n), std::move(li), std::move(len)});
  }
  return out;
}

std::vector<LatticeVector> boundary_points(const Polygon& p) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LatticeVector& a = p.vertex(i);
    LatticeVector d = p.vertex(i + 1) - a;
    Integer g = d.content();
    LatticeVector step = d.divided_by(g);
    LatticeVector x = a;
    for (Integer k = 0; k < g; ++k) {
      out.push_back(x);
      x += step;
    }
  }
  return out;
}

std::size_t count_boundary_points(const Polygon& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p.vertex(i + 1) - p.vertex(i)).content();
  return static_cast<std::size_t>(to_int64(s));
}

namespace {

// Calls f(x, y) for every lattice point strictly inside p, row by row.
template <class F>
void scan_interior(const Polygon& p, F&& f) {
  auto hps = half_planes(p);
  Integer ymin = p.vertex(0).y(), ymax = ymin;
  for (const auto& v : p.vertices()) {
    ymin = std::min(ymin, v.y());
    ymax = std::max(ymax, v.y());
  }
  for (Integer y = ymin + 1; y < ymax; ++y) {
    bool empty = false, have_lo = false, have_hi = false;
    Integer lo, hi;
    for (const auto& h : hps) {
      // a x + b y < c
      const Integer& a = h.normal.x();
      Integer r = h.offset - h.normal.y() * y;
      if (a > 0) {
        Integer bound = ceil_div(r, a) - 1;
        if (!have_hi || bound < hi) hi = std::move(bound);
        have_hi = true;
      } else if (a < 0) {
        Integer bound = floor_div(r, a) + 1;
        if (!have_lo || bound > lo) lo = std::move(bound);
        have_lo = true;
      } else if (r <= 0) {
        empty = true;
        break;
      }
    }
    if (empty || !have_lo || !have_hi) continue;
    f(lo, hi, y);
  }
}

}  // namespace

std::vector<LatticeVector> interior_points(const Polygon& p) {
  std::vector<LatticeVector> out;
  scan_interior(p, [&](const Integer& lo, const Integer& hi, const Integer& y) {
    for (Integer x = lo; x <= hi; ++x) out.emplace_back(x, y);
  });
  return out;
}

std::size_t count_interior_points(const Polygon& p) {
  Integer n = 0;
  scan_interior(p, [&](const Integer& lo, const Integer& hi, const Integer&) {
    if (hi >= lo) n += hi - lo + 1;
  });
  return static_cast<std::size_t>(to_int64(n));
}

std::size_t count_lattice_points(const Polygon& p) {
  return count_interior_points(p) + count_boundary_points(p);
}

Integer normalized_volume(const Polygon& p) { return signed_double_area(p.vertices()); }

IntMatrix canonical_form(const Polygon& p) {
  const std::size_t m = p.size();
  IntMatrix best;
  bool have = false;
  IntMatrix frame(2, m);
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t idx = dir > 0 ? (s + k) % m : (s + m - k) % m;
        frame(0, k) = p.vertex(idx).x();
        frame(1, k) = p.vertex(idx).y();
      }
      IntMatrix h = hnf_matrix(frame);
      if (!have || h < best) {
        best = std::move(h);
        have = true;
      }
    }
  }
  return best;
}

bool is_isomorphic(const Polygon& p, const Polygon& q) {
  if (p.size() != q.size()) return false;
  return canonical_form(p) == canonical_form(q);
}

Polygon polygon_from_columns(const IntMatrix& m) {
  std::vector<LatticeVector> pts;
  pts.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) pts.emplace_back(m(0, c), m(1, c));
  if (signed_double_area(pts) < 0) std::reverse(pts.begin() + 1, pts.end());
  return Polygon(std::move(pts));
}

Polygon apply_matrix(const Polygon& p, const IntMatrix& h) {
  Integer d = determinant(h);
  if (d == 0) throw GeometryError("singular map");
  std::vector<LatticeVector> pts;
  pts.reserve(p.size());
  for (const auto& v : p.vertices()) pts.push_back(v * h);
  if (d < 0) std::reverse(pts.begin() + 1, pts.end());
  return Polygon(std::move(pts));
}

Polygon scaled(const Polygon& p, const Integer& k) {
  if (k <= 0) throw GeometryError("scale factor must be positive");
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(k * v);
  return Polygon(std::move(pts));
}

}  // namespace lrp
