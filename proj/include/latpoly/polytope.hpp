#pragma once

// Full-dimensional lattice polytopes, presented both ways: the vertex list
// and the complete facet system. Everything downstream (counting, duality,
// triangulations) leans on both descriptions being exact and in a canonical
// order, so make_polytope sorts vertices lexicographically and facets by
// (normal, offset); the same input set always yields the same object.
//
// The construction is exhaustive over d-subsets of the input points. That is
// deliberate: inputs here are small (vertex sets of reflexive polytopes in
// dimension at most 4 or so), and the exhaustive route has no positional
// degeneracy cases to get wrong.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/linalg.hpp"

namespace latpoly {

enum class Location { outside, boundary, interior };

// One facet {x : <normal, x> = offset} of P = {x : <normal, x> <= offset}.
// normal is primitive and outward; vertex_indices index into
// Polytope::vertices() and are ascending.
struct FacetDescription {
  IntVector normal;
  Int offset = 0;
  std::vector<int> vertex_indices;
};

class Polytope {
 public:
  Polytope(int dim, std::vector<IntVector> vertices,
           std::vector<FacetDescription> facets, bool simplicial)
      : dim_(dim),
        vertices_(std::move(vertices)),
        facets_(std::move(facets)),
        simplicial_(simplicial) {}

  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<FacetDescription>& facets() const { return facets_; }
  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_facets() const { return static_cast<int>(facets_.size()); }
  bool is_simplicial() const { return simplicial_; }

 private:
  int dim_;
  std::vector<IntVector> vertices_;
  std::vector<FacetDescription> facets_;
  bool simplicial_;
};

using FVector = std::vector<Int>;
using HVector = std::vector<Int>;

// Convex hull of the given points. Duplicates are dropped; the points must
// span all of R^d (degenerate_input otherwise). Every supporting hyperplane
// is found by scanning all d-subsets, so this is O(n^d) scans and intended
// for small vertex sets.
inline Polytope make_polytope(const std::vector<IntVector>& points) {
  if (points.empty()) throw degenerate_input("make_polytope: no points");
  const int d = static_cast<int>(points[0].size());
  if (d == 0) throw dimension_error("make_polytope: points in Z^0");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d)
      throw dimension_error("make_polytope: mixed point dimensions");

  std::set<IntVector> dedup(points.begin(), points.end());
  std::vector<IntVector> pts(dedup.begin(), dedup.end());
  const int n = static_cast<int>(pts.size());

  {
    IntMatrix diffs = IntMatrix::zero(n - 1 > 0 ? n - 1 : 0, d);
    for (int i = 1; i < n; ++i) diffs.rows[i - 1] = vec_sub(pts[i], pts[0]);
    if (n - 1 < d || rank(diffs) != d)
      throw degenerate_input("make_polytope: points do not span R^d");
  }

  // Candidate facets: each one-sided hyperplane through an affinely
  // independent d-subset, oriented outward, deduplicated.
  std::set<std::pair<IntVector, Int>> planes;
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  while (true) {
    std::vector<IntVector> diffs;
    for (int i = 1; i < d; ++i)
      diffs.push_back(vec_sub(pts[comb[i]], pts[comb[0]]));
    IntVector normal = cross_normal(diffs);
    if (!is_zero_vector(normal)) {
      normal = primitive_vector(normal);
      Int b = dot(normal, pts[comb[0]]);
      bool above = false, below = false;
      for (const auto& p : pts) {
        Int v = dot(normal, p);
        if (v > b) above = true;
        if (v < b) below = true;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (!above && !below)
          throw internal_error("make_polytope: all points on one hyperplane");
        if (above) planes.insert({vec_neg(normal), -b});
        else planes.insert({normal, b});
      }
    }
    int i = d - 1;
    while (i >= 0 && comb[i] == n - 1 - (d - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }

  // A point is a vertex iff its active normals span R^d.
  std::vector<IntVector> vertices;
  for (const auto& p : pts) {
    IntMatrix active;
    for (const auto& [normal, b] : planes)
      if (dot(normal, p) == b) active.rows.push_back(normal);
    if (active.nrows() >= d && rank(active) == d) vertices.push_back(p);
  }

  std::vector<FacetDescription> facets;
  bool simplicial = true;
  for (const auto& [normal, b] : planes) {
    FacetDescription f;
    f.normal = normal;
    f.offset = b;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (dot(normal, vertices[i]) == b) f.vertex_indices.push_back(i);
    if (static_cast<int>(f.vertex_indices.size()) < d)
      throw internal_error("make_polytope: facet with fewer than d vertices");
    if (static_cast<int>(f.vertex_indices.size()) != d) simplicial = false;
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const FacetDescription& a, const FacetDescription& b) {
              return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
            });
  return Polytope(d, std::move(vertices), std::move(facets), simplicial);
}

// Where x sits relative to the dilation m*P. m = 0 collapses P to the
// origin, which counts as boundary.
inline Location contains_point(const Polytope& p, const IntVector& x, const Int& m = 1) {
  if (static_cast<int>(x.size()) != p.dim())
    throw dimension_error("contains_point: wrong point dimension");
  if (m < 0) throw domain_error("contains_point: negative dilation");
  if (m == 0) return is_zero_vector(x) ? Location::boundary : Location::outside;
  bool on_facet = false;
  for (const auto& f : p.facets()) {
    Int v = dot(f.normal, x);
    Int bound = m * f.offset;
    if (v > bound) return Location::outside;
    if (v == bound) on_facet = true;
  }
  return on_facet ? Location::boundary : Location::interior;
}

// Normalized (d-1)-volume of one facet, measured in the lattice of its own
// hyperplane. A simplex facet is a single determinant against a lattice
// point of height one over the hyperplane; other facets are mapped by a
// unimodular chart into Z^(d-1) and handled as full-dimensional polytopes.
inline Int normalized_volume(const Polytope& p);

inline Int facet_normalized_volume(const Polytope& p, int facet_index) {
  const int d = p.dim();
  if (facet_index < 0 || facet_index >= p.n_facets())
    throw precondition_error("facet_normalized_volume: bad facet index");
  const FacetDescription& f = p.facets()[facet_index];
  IntMatrix frame = hyperplane_frame(f.normal);
  const IntVector& v0 = p.vertices()[f.vertex_indices[0]];
  if (static_cast<int>(f.vertex_indices.size()) == d) {
    IntMatrix m = IntMatrix::zero(d, d);
    for (int i = 1; i < d; ++i)
      m.rows[i - 1] = vec_sub(p.vertices()[f.vertex_indices[i]], v0);
    m.rows[d - 1] = frame.rows[d - 1];
    return int_abs(determinant(m));
  }
  // chart: x - v0 = frame^T * c, so c = (frame^{-1})^T (x - v0); the last
  // coordinate is <normal, x - v0> = 0 on the facet and gets dropped.
  IntMatrix chart = transpose(unimodular_inverse(frame));
  std::vector<IntVector> shadow;
  for (int vi : f.vertex_indices) {
    IntVector c = mat_vec(chart, vec_sub(p.vertices()[vi], v0));
    if (c[d - 1] != 0) throw internal_error("facet chart: point off hyperplane");
    c.pop_back();
    shadow.push_back(std::move(c));
  }
  return normalized_volume(make_polytope(shadow));
}

// d! times the Euclidean volume. Fanning the facets from the origin gives
// d vol = sum over facets of <offset> * vol_{d-1}(facet); the signed sum is
// position-independent, so no containment assumption on the origin is made.
inline Int normalized_volume(const Polytope& p) {
  Int acc = 0;
  for (int i = 0; i < p.n_facets(); ++i)
    acc += facet_normalized_volume(p, i) * p.facets()[i].offset;
  if (acc <= 0) throw internal_error("normalized_volume: nonpositive total");
  return acc;
}

// Sum of the facet volumes, each in its own hyperplane lattice.
inline Int normalized_boundary_volume(const Polytope& p) {
  Int acc = 0;
  for (int i = 0; i < p.n_facets(); ++i) acc += facet_normalized_volume(p, i);
  return acc;
}

// (f_0, ..., f_{d-1}) of the boundary complex. Only simplicial polytopes:
// there the proper faces are exactly the vertex subsets of facets, so the
// count is a subset scan.
inline FVector f_vector(const Polytope& p) {
  if (!p.is_simplicial())
    throw unsupported_shape("f_vector: polytope is not simplicial");
  const int d = p.dim();
  std::set<std::vector<int>> faces;
  for (const auto& f : p.facets()) {
    const auto& vs = f.vertex_indices;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) face.push_back(vs[i]);
      faces.insert(std::move(face));
    }
  }
  FVector f(d, 0);
  for (const auto& face : faces) ++f[face.size() - 1];
  if (f[d - 1] != p.n_facets())
    throw internal_error("f_vector: facet count mismatch");
  return f;
}

// h-vector from the f-vector of a (d-1)-dimensional simplicial complex:
//   h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, d-k) f_{i-1},   f_{-1} = 1.
inline HVector h_from_f(const FVector& f, int d) {
  if (static_cast<int>(f.size()) != d)
    throw dimension_error("h_from_f: need f_0..f_{d-1}");
  HVector h(d + 1);
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) {
      Int fi = (i == 0) ? Int(1) : f[i - 1];
      Int term = binomial(d - i, d - k) * fi;
      acc += ((k - i) & 1) ? -term : term;
    }
    h[k] = acc;
  }
  Int total = 0;
  for (const auto& x : h) total += x;
  if (h[0] != 1 || total != f[d - 1])
    throw internal_error("h_from_f: failed consistency check");
  return h;
}

inline bool is_centrally_symmetric(const Polytope& p) {
  std::vector<IntVector> neg;
  for (const auto& v : p.vertices()) neg.push_back(vec_neg(v));
  std::sort(neg.begin(), neg.end());
  return neg == p.vertices();
}

// Is there U in GL_d(Z) with U * P = Q? Exhaustive: fix a linearly
// independent vertex tuple of P and try every same-size ordered vertex
// tuple of Q as its image. Kept to dim <= 4 where the tuple count is tame.
inline bool lattice_equivalent(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    throw dimension_error("lattice_equivalent: dimensions differ");
  const int d = p.dim();
  if (d > 4)
    throw unsupported_shape("lattice_equivalent: exhaustive search handles dim <= 4");
  if (p.n_vertices() != q.n_vertices() || p.n_facets() != q.n_facets())
    return false;
  if (normalized_volume(p) != normalized_volume(q)) return false;

  // greedy linearly independent spanning tuple from P's vertices
  std::vector<int> basis;
  IntMatrix acc;
  for (int i = 0; i < p.n_vertices() && static_cast<int>(basis.size()) < d; ++i) {
    acc.rows.push_back(p.vertices()[i]);
    if (rank(acc) == static_cast<int>(acc.nrows())) basis.push_back(i);
    else acc.rows.pop_back();
  }
  if (static_cast<int>(basis.size()) != d)
    throw internal_error("lattice_equivalent: vertices do not span");

  IntMatrix v = IntMatrix::zero(d, d);  // columns: chosen vertices of P
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) v.rows[r][j] = p.vertices()[basis[j]][r];
  const Int det_v = determinant(v);
  const IntMatrix adj_v = adjugate(v);

  std::vector<IntVector> q_sorted = q.vertices();  // already lex sorted

  const int nq = q.n_vertices();
  std::vector<int> pick(d, 0);
  while (true) {
    bool distinct = true;
    for (int a = 0; a < d && distinct; ++a)
      for (int b = a + 1; b < d; ++b)
        if (pick[a] == pick[b]) {
          distinct = false;
          break;
        }
    if (distinct) {
      IntMatrix w = IntMatrix::zero(d, d);  // columns: candidate images
      for (int j = 0; j < d; ++j)
        for (int r = 0; r < d; ++r) w.rows[r][j] = q.vertices()[pick[j]][r];
      Int det_w = determinant(w);
      if (det_w == det_v || det_w == -det_v) {
        // U = W V^{-1} = W adj(V) / det(V); keep only integral unimodular U
        IntMatrix u_num = mat_mul(w, adj_v);
        bool integral = det_w != 0;
        IntMatrix u = IntMatrix::zero(d, d);
        for (int r = 0; r < d && integral; ++r)
          for (int c = 0; c < d; ++c) {
            if (u_num.rows[r][c] % det_v != 0) {
              integral = false;
              break;
            }
            u.rows[r][c] = u_num.rows[r][c] / det_v;
          }
        if (integral && int_abs(determinant(u)) == 1) {
          std::vector<IntVector> image;
          for (const auto& x : p.vertices()) image.push_back(mat_vec(u, x));
          std::sort(image.begin(), image.end());
          if (image == q_sorted) return true;
        }
      }
    }
    int i = d - 1;
    while (i >= 0 && pick[i] == nq - 1) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[i];
  }
  return false;
}

}  // namespace latpoly
