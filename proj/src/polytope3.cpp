#include "lrp/polytope3.hpp"

#include "lrp/reflexive.hpp"

#include <algorithm>
#include <map>

namespace lrp {

namespace {

bool rank3(const std::vector<const LatticeVector*>& normals) {
  for (std::size_t a = 0; a < normals.size(); ++a)
    for (std::size_t b = a + 1; b < normals.size(); ++b) {
      LatticeVector c = cross(*normals[a], *normals[b]);
      for (std::size_t d = b + 1; d < normals.size(); ++d)
        if (dot(c, *normals[d]) != 0) return true;
    }
  return false;
}

IntMatrix adjugate3(const IntMatrix& a) {
  IntMatrix adj(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
    }
  return adj;
}

}  // namespace

Polytope3 build_polytope3(std::span<const LatticeVector> points) {
  std::vector<LatticeVector> pts(points.begin(), points.end());
  for (const auto& p : pts)
    if (p.dim() != 3) throw GeometryError("polytope vertices must be three-dimensional");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Supporting planes through every non-collinear triple.
  std::map<LatticeVector, Integer> planes;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        LatticeVector n = cross(pts[b] - pts[a], pts[c] - pts[a]);
        if (n.is_zero()) continue;
        n = primitive_part(n);
        Integer off = dot(n, pts[a]);
        bool below = true, above = true;
        for (const auto& p : pts) {
          Integer s = dot(n, p);
          below = below && s <= off;
          above = above && s >= off;
        }
        if (below && above) throw GeometryError("degenerate point set: coplanar");
        if (below) planes.emplace(n, off);
        if (above) planes.emplace(-n, -off);
      }
  if (planes.size() < 4) throw GeometryError("degenerate point set");

  Polytope3 out;
  for (const auto& [n, off] : planes)
    if (off <= 0) throw GeometryError("origin not interior");

  for (const auto& p : pts) {
    std::vector<const LatticeVector*> normals;
    for (const auto& [n, off] : planes)
      if (dot(n, p) == off) normals.push_back(&n);
    if (rank3(normals)) out.vertices.push_back(p);
  }
  for (const auto& [n, off] : planes) {
    Facet f{n, off, {}};
    for (std::size_t v = 0; v < out.vertices.size(); ++v)
      if (dot(n, out.vertices[v]) == off) f.vertices.push_back(v);
    out.facets.push_back(std::move(f));
  }
  for (std::size_t a = 0; a < out.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      std::vector<std::size_t> shared;
      for (std::size_t f = 0; f < out.facets.size(); ++f) {
        const auto& fv = out.facets[f].vertices;
        if (std::count(fv.begin(), fv.end(), a) && std::count(fv.begin(), fv.end(), b)) shared.push_back(f);
      }
      if (shared.size() < 2) continue;
      if (shared.size() > 2) throw GeometryError("edge on more than two facets");
      out.edges.push_back({a, b, shared[0], shared[1]});
    }
  return out;
}

std::optional<long long> is_l_reflexive_3(const Polytope3& p) {
  for (const auto& v : p.vertices)
    if (!is_primitive(v)) return std::nullopt;
  for (const auto& f : p.facets)
    if (f.local_index != p.facets.front().local_index) return std::nullopt;
  return to_int64(p.facets.front().local_index);
}

Polytope3 dual_scaled_3(const Polytope3& p, long long l) {
  auto idx = is_l_reflexive_3(p);
  if (!idx || *idx != l) throw GeometryError("not l-reflexive");
  std::vector<LatticeVector> normals;
  for (const auto& f : p.facets) normals.push_back(f.normal);
  return build_polytope3(normals);
}

Integer sum_24(const Polytope3& p, long long l) {
  auto idx = is_l_reflexive_3(p);
  if (!idx || *idx != l) throw GeometryError("not l-reflexive");
  Integer s = 0;
  for (const auto& e : p.edges) {
    Integer len = (p.vertices[e.head] - p.vertices[e.tail]).content();
    Integer dual_len = (p.facets[e.facet_a].normal - p.facets[e.facet_b].normal).content();
    s += len * dual_len;
  }
  return s;
}

std::vector<LatticeVector> edge_lattice_points(const Polytope3& p) {
  std::vector<LatticeVector> out(p.vertices);
  for (const auto& e : p.edges) {
    LatticeVector d = p.vertices[e.head] - p.vertices[e.tail];
    Integer g = d.content();
    LatticeVector step = d.divided_by(g);
    LatticeVector x = p.vertices[e.tail];
    for (Integer k = 1; k < g; ++k) {
      x += step;
      out.push_back(x);
    }
  }
  return out;
}

std::vector<LatticeVector> boundary_lattice_points(const Polytope3& p) {
  Integer lo[3], hi[3];
  for (std::size_t c = 0; c < 3; ++c) {
    lo[c] = hi[c] = p.vertices.front()[c];
    for (const auto& v : p.vertices) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  }
  std::vector<LatticeVector> out;
  for (Integer x = lo[0]; x <= hi[0]; ++x)
    for (Integer y = lo[1]; y <= hi[1]; ++y)
      for (Integer z = lo[2]; z <= hi[2]; ++z) {
        LatticeVector q(x, y, z);
        bool inside = true, tight = false;
        for (const auto& f : p.facets) {
          Integer s = dot(f.normal, q);
          if (s > f.local_index) {
            inside = false;
            break;
          }
          tight = tight || s == f.local_index;
        }
        if (inside && tight) out.push_back(std::move(q));
      }
  return out;
}

SublatticeInfo vertex_lattice(const Polytope3& p) { return sublattice_of(p.vertices); }

SublatticeInfo edge_lattice(const Polytope3& p) {
  auto pts = edge_lattice_points(p);
  return sublattice_of(pts);
}

SublatticeInfo boundary_lattice(const Polytope3& p) {
  auto pts = boundary_lattice_points(p);
  return sublattice_of(pts);
}

Polytope3 restrict_polytope(const Polytope3& p, const SublatticeInfo& lattice) {
  auto coords = restrict_to_sublattice(p.vertices, lattice);
  return build_polytope3(coords);
}

Polytope3 apply_matrix_3(const Polytope3& p, const IntMatrix& m) {
  if (determinant(m) == 0) throw GeometryError("singular map");
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices) pts.push_back(v * m);
  return build_polytope3(pts);
}

bool is_isomorphic_3(const Polytope3& p, const Polytope3& q) {
  if (p.vertices.size() != q.vertices.size() || p.facets.size() != q.facets.size() ||
      p.edges.size() != q.edges.size())
    return false;
  // Three linearly independent vertices of p form the source frame.
  const auto& pv = p.vertices;
  std::size_t fa = 0, fb = 0, fc = 0;
  bool found = false;
  for (std::size_t a = 0; a < pv.size() && !found; ++a)
    for (std::size_t b = a + 1; b < pv.size() && !found; ++b)
      for (std::size_t c = b + 1; c < pv.size() && !found; ++c)
        if (dot(cross(pv[a], pv[b]), pv[c]) != 0) {
          fa = a, fb = b, fc = c;
          found = true;
        }
  if (!found) return false;
  const std::vector<LatticeVector> frame{pv[fa], pv[fb], pv[fc]};
  const IntMatrix a = IntMatrix::from_rows(frame);
  const Integer det_a = determinant(a);
  const IntMatrix adj = adjugate3(a);

  const auto& qv = q.vertices;
  for (std::size_t x = 0; x < qv.size(); ++x)
    for (std::size_t y = 0; y < qv.size(); ++y)
      for (std::size_t z = 0; z < qv.size(); ++z) {
        if (x == y || y == z || x == z) continue;
        const std::vector<LatticeVector> target{qv[x], qv[y], qv[z]};
        // W = A^{-1} B must be integral and unimodular.
        IntMatrix w = adj * IntMatrix::from_rows(target);
        bool integral = true;
        for (std::size_t i = 0; i < 3 && integral; ++i)
          for (std::size_t j = 0; j < 3 && integral; ++j) {
            if (w(i, j) % det_a != 0) integral = false;
            else w(i, j) /= det_a;
          }
        if (!integral || abs(determinant(w)) != 1) continue;
        std::vector<LatticeVector> image;
        for (const auto& v : pv) image.push_back(v * w);
        std::sort(image.begin(), image.end());
        if (image == qv) return true;
      }
  return false;
}

SimplexWeights simplex_weights(std::span<const LatticeVector> vertices) {
  const std::size_t n = vertices.empty() ? 0 : vertices[0].dim();
  if ((n != 2 && n != 3) || vertices.size() != n + 1) throw GeometryError("not the vertex set of a simplex");
  // lambda_i = (-1)^i det(vertices without v_i) spans the relations.
  std::vector<Integer> w;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<LatticeVector> rest;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) rest.push_back(vertices[k]);
    Integer d = determinant(IntMatrix::from_rows(rest));
    w.push_back(i % 2 ? Integer(-d) : d);
  }
  Integer g = gcd_all(w);
  if (g == 0) throw GeometryError("degenerate simplex");
  if (w.front() < 0) g = -g;
  for (auto& x : w) {
    x /= g;
    if (x <= 0) throw GeometryError("origin not interior");
  }
  return {std::move(w), sublattice_of(vertices).index};
}

bool divides_multiplicity(const Polygon& triangle) {
  if (triangle.size() != 3) throw GeometryError("not a triangle");
  auto l = is_l_reflexive(triangle);
  if (!l) throw GeometryError("not l-reflexive");
  return simplex_weights(triangle.vertices()).multiplicity % *l == 0;
}

bool one_reflexive_on_vertex_lattice(const Polytope3& p) {
  auto q = restrict_polytope(p, vertex_lattice(p));
  auto idx = is_l_reflexive_3(q);
  return idx && *idx == 1;
}

}  // namespace lrp
