#include "lrp/loops.hpp"

#include "lrp/reflexive.hpp"

#include <algorithm>

namespace lrp {

LoopError::LoopError(int condition, std::size_t position, const std::string& what)
    : GeometryError("condition (" + std::to_string(condition) + ") violated at index " +
                    std::to_string(position) + ": " + what),
      condition_{condition},
      position_{position} {}

namespace {

bool on_segment(const LatticeVector& x, const LatticeVector& a, const LatticeVector& b) {
  if (det2(b - a, x - a) != 0) return false;
  return dot(x - a, x - b) <= 0;
}

const LatticeVector& at(const std::vector<LatticeVector>& pts, std::size_t i) { return pts[i % pts.size()]; }

// Primitive normal u of the step x -> y with <u, x> = <u, y> = l.
LatticeVector step_normal(const LatticeVector& x, const LatticeVector& y, long long l) {
  LatticeVector d = y - x;
  Integer s = det2(x, y) / l;  // ±1
  return {s * d.y(), -s * d.x()};
}

}  // namespace

Loop validate_loop(std::vector<LatticeVector> points, long long l) {
  const std::size_t t = points.size();
  if (l < 1) throw GeometryError("loop index must be positive");
  if (t < 3) throw GeometryError("degenerate loop: fewer than three points");
  for (const auto& p : points)
    if (p.dim() != 2) throw GeometryError("loop points must be two-dimensional");
  for (std::size_t i = 0; i < t; ++i) {
    const auto& x = points[i];
    const auto& y = at(points, i + 1);
    if (!is_primitive(y - x)) throw LoopError(1, i, "step " + to_string(x) + " -> " + to_string(y));
    if (abs(det2(x, y)) != l) throw LoopError(2, i, "det(" + to_string(x) + ", " + to_string(y) + ")");
  }
  for (std::size_t i = 0; i < t; ++i) {
    const auto& x = points[i];
    if (!on_segment(x, at(points, i + t - 1), at(points, i + 1)) && !is_primitive(x))
      throw LoopError(3, i, "vertex " + to_string(x) + " is not primitive");
  }
  return Loop{std::move(points), l};
}

Loop loop_of_polygon(const Polygon& p) {
  auto l = is_l_reflexive(p);
  if (!l) throw GeometryError("not l-reflexive");
  return validate_loop(boundary_points(p), *l);
}

long long loop_length(const Loop& loop) {
  Integer s = 0;
  for (std::size_t i = 0; i < loop.points.size(); ++i) s += det2(loop.points[i], at(loop.points, i + 1));
  return to_int64(s / loop.index);
}

Loop dual_loop(const Loop& loop) {
  const auto& x = loop.points;
  const std::size_t t = x.size();
  std::vector<LatticeVector> u;
  u.reserve(t);
  for (std::size_t i = 0; i < t; ++i) u.push_back(step_normal(x[i], at(x, i + 1), loop.index));

  // Lattice points of conv(u_i, u_{i+1}), each segment without its far end.
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& a = u[i];
    const auto& b = at(u, i + 1);
    if (a == b) continue;
    LatticeVector d = b - a;
    Integer g = d.content();
    LatticeVector step = d.divided_by(g);
    LatticeVector p = a;
    for (Integer k = 0; k < g; ++k) {
      out.push_back(p);
      p += step;
    }
  }
  if (out.size() < 3) throw GeometryError("degenerate dual loop");
  return validate_loop(std::move(out), loop.index);
}

long long winding_number(const Loop& loop) {
  // Signed crossings of the ray through (1,0). Each step turns by less than
  // pi, in the direction given by the sign of det(x_i, x_{i+1}).
  long long w = 0;
  const auto& x = loop.points;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& a = x[i];
    const auto& b = at(x, i + 1);
    if (a.is_zero() || b.is_zero()) throw GeometryError("loop passes through the origin");
    Integer d = det2(a, b);
    if (a.y() < 0 && b.y() >= 0 && d > 0) ++w;
    if (b.y() < 0 && a.y() >= 0 && d < 0) --w;
  }
  return w;
}

LoopMetrics metrics(const Loop& loop) { return {loop_length(loop), winding_number(loop), loop.points.size()}; }

bool twelve_w_check(const Loop& loop) {
  return loop_length(loop) + loop_length(dual_loop(loop)) == 12 * winding_number(loop);
}

SublatticeInfo loop_boundary_sublattice(const Loop& loop) { return sublattice_of(loop.points); }

Loop traversed(const Loop& loop, int times) {
  if (times < 1) throw GeometryError("traversal count must be positive");
  Loop out{{}, loop.index};
  for (int k = 0; k < times; ++k) out.points.insert(out.points.end(), loop.points.begin(), loop.points.end());
  return out;
}

Loop reversed(const Loop& loop) {
  Loop out = loop;
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

Loop map_loop(const Loop& loop, const IntMatrix& h, long long new_index) {
  std::vector<LatticeVector> pts;
  pts.reserve(loop.points.size());
  for (const auto& p : loop.points) pts.push_back(p * h);
  return validate_loop(std::move(pts), new_index);
}

bool same_cycle(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (int dir : {1, -1})
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        std::size_t j = dir > 0 ? (s + k) % n : (s + n - k) % n;
        ok = a[k] == b[j];
      }
      if (ok) return true;
    }
  return false;
}

std::vector<Loop> search_loops(long long l, int radius, std::size_t max_points,
                               const std::function<bool(const Loop&)>& keep, std::size_t max_results) {
  std::vector<LatticeVector> box;
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y)
      if (x != 0 || y != 0) box.emplace_back(x, y);
  const std::size_t n = box.size();
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (abs(det2(box[a], box[b])) == l && is_primitive(box[b] - box[a])) next[a].push_back(b);

  auto vertex_ok = [&](std::size_t prev, std::size_t cur, std::size_t nxt) {
    return is_primitive(box[cur]) || on_segment(box[cur], box[prev], box[nxt]);
  };

  std::vector<Loop> found;
  std::vector<std::size_t> path;
  std::vector<char> used(n, 0);
  std::function<void()> dfs = [&] {
    if (found.size() >= max_results) return;
    const std::size_t cur = path.back();
    for (std::size_t nx : next[cur]) {
      if (found.size() >= max_results) return;
      if (nx == path.front()) {
        if (path.size() < 3) continue;
        if (!vertex_ok(path[path.size() - 2], cur, nx) || !vertex_ok(cur, nx, path[1])) continue;
        std::vector<LatticeVector> pts;
        for (std::size_t k : path) pts.push_back(box[k]);
        Loop loop = validate_loop(std::move(pts), l);
        if (!keep || keep(loop)) found.push_back(std::move(loop));
        continue;
      }
      if (used[nx] || nx < path.front() || path.size() >= max_points) continue;
      if (path.size() >= 2 && !vertex_ok(path[path.size() - 2], cur, nx)) continue;
      used[nx] = 1;
      path.push_back(nx);
      dfs();
      path.pop_back();
      used[nx] = 0;
    }
  };
  // box is sorted lexicographically, so index order is point order.
  for (std::size_t s = 0; s < n && found.size() < max_results; ++s) {
    path.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    dfs();
  }
  return found;
}

}  // namespace lrp
