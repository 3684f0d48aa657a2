#pragma once

// Boundary and cone triangulations with exact per-simplex determinants.
//
// The pulled boundary triangulation processes the lattice points of each
// facet in one global lexicographic order (original coordinates). Pulling
// restricts to pulling on shared ridges under the same order, so the
// per-facet triangulations agree across facet boundaries and the union is
// a genuine complex. Each facet is worked in a unimodular chart of its
// hyperplane, where cells are full-dimensional and determinants are plain
// (d-1) x (d-1) minors.
//
// Correctness is self-certified: per facet, the cell determinants must sum
// to the facet volume (a tiling certificate), and every facet lattice point
// must end up as a cell vertex.

#include <algorithm>
#include <set>
#include <vector>

#include "latpoly/ehrhart.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/linalg.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/reflexive.hpp"

namespace latpoly {

enum class TriangulationKind { boundary, full_cone };

struct LatticeSimplex {
  std::vector<IntVector> vertices;  // d for boundary simplices, d+1 for cones
  Int det = 0;                      // sublattice index, always >= 1
};

struct Triangulation {
  TriangulationKind kind = TriangulationKind::boundary;
  int dim = 0;
  std::vector<LatticeSimplex> simplices;
  std::vector<IntVector> vertex_set;  // lex sorted, deduplicated
};

namespace detail {

// Pulling triangulation of one facet, working in chart coordinates.
// `points` are the facet's lattice points in original coordinates, already
// lex sorted; that order is the pull order. Returns index sets of the
// resulting simplices.
inline std::vector<std::vector<int>> pull_facet(
    const std::vector<IntVector>& chart_pts) {
  const int e = static_cast<int>(chart_pts[0].size());
  const int n = static_cast<int>(chart_pts.size());
  std::vector<std::vector<int>> cells;
  {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    cells.push_back(all);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& cell : cells) {
      std::vector<IntVector> cpts;
      for (int j : cell) cpts.push_back(chart_pts[j]);
      Polytope cp = make_polytope(cpts);
      if (contains_point(cp, chart_pts[i]) == Location::outside) {
        next.push_back(cell);
        continue;
      }
      for (const auto& g : cp.facets()) {
        if (dot(g.normal, chart_pts[i]) == g.offset) continue;
        std::set<int> nc = {i};
        for (int j : cell)
          if (dot(g.normal, chart_pts[j]) == g.offset) nc.insert(j);
        next.emplace_back(nc.begin(), nc.end());
      }
    }
    cells = std::move(next);
  }
  for (const auto& cell : cells)
    if (static_cast<int>(cell.size()) != e + 1)
      throw internal_error("pull_facet: non-simplex cell survived");
  return cells;
}

inline Int simplex_det(const std::vector<IntVector>& chart_vertices) {
  const int e = static_cast<int>(chart_vertices.size()) - 1;
  IntMatrix m = IntMatrix::zero(e, e);
  for (int i = 1; i <= e; ++i)
    m.rows[i - 1] = vec_sub(chart_vertices[i], chart_vertices[0]);
  Int det = int_abs(determinant(m));
  if (det == 0) throw internal_error("simplex_det: degenerate simplex");
  return det;
}

}  // namespace detail

// Triangulation of the boundary. With use_all_boundary_points false the
// polytope must be simplicial and the complex is just the facets. With the
// flag true the polytope must be reflexive; each facet is triangulated by
// pulling its lattice points in global lex order, so the vertex set becomes
// all of the boundary lattice points.
inline Triangulation boundary_triangulation(const Polytope& p,
                                            bool use_all_boundary_points) {
  const int d = p.dim();
  Triangulation t;
  t.kind = TriangulationKind::boundary;
  t.dim = d;

  if (!use_all_boundary_points) {
    if (!p.is_simplicial())
      throw unsupported_shape(
          "boundary_triangulation: need the flag for non-simplicial input");
    for (int i = 0; i < p.n_facets(); ++i) {
      LatticeSimplex s;
      for (int vi : p.facets()[i].vertex_indices)
        s.vertices.push_back(p.vertices()[vi]);
      s.det = facet_normalized_volume(p, i);
      t.simplices.push_back(std::move(s));
    }
    t.vertex_set = p.vertices();
    return t;
  }

  if (!is_reflexive(p))
    throw precondition_error(
        "boundary_triangulation: full point set requires a reflexive polytope");

  std::vector<IntVector> boundary;
  for (const auto& x : count_lattice_points(p, 1, true).points)
    if (contains_point(p, x) == Location::boundary) boundary.push_back(x);

  for (int fi = 0; fi < p.n_facets(); ++fi) {
    const FacetDescription& f = p.facets()[fi];
    std::vector<IntVector> pts;  // facet lattice points, lex order
    for (const auto& x : boundary)
      if (dot(f.normal, x) == f.offset) pts.push_back(x);

    if (d == 1) {
      LatticeSimplex s;
      s.vertices = pts;
      s.det = 1;
      t.simplices.push_back(std::move(s));
      continue;
    }

    IntMatrix frame = hyperplane_frame(f.normal);
    IntMatrix chart = transpose(unimodular_inverse(frame));
    const IntVector& v0 = pts[0];
    std::vector<IntVector> chart_pts;
    for (const auto& x : pts) {
      IntVector c = mat_vec(chart, vec_sub(x, v0));
      if (c[d - 1] != 0)
        throw internal_error("boundary_triangulation: point off facet plane");
      c.pop_back();
      chart_pts.push_back(std::move(c));
    }

    Int facet_total = 0;
    std::set<int> used;
    std::vector<LatticeSimplex> local;
    for (const auto& cell : detail::pull_facet(chart_pts)) {
      LatticeSimplex s;
      std::vector<IntVector> cverts;
      for (int j : cell) {
        s.vertices.push_back(pts[j]);
        cverts.push_back(chart_pts[j]);
        used.insert(j);
      }
      s.det = detail::simplex_det(cverts);
      facet_total += s.det;
      local.push_back(std::move(s));
    }
    if (facet_total != facet_normalized_volume(p, fi))
      throw internal_error("boundary_triangulation: facet volume not tiled");
    if (static_cast<int>(used.size()) != static_cast<int>(pts.size()))
      throw internal_error("boundary_triangulation: unused facet point");
    std::sort(local.begin(), local.end(),
              [](const LatticeSimplex& a, const LatticeSimplex& b) {
                return a.vertices < b.vertices;
              });
    for (auto& s : local) t.simplices.push_back(std::move(s));
  }

  t.vertex_set = boundary;
  return t;
}

// The cone triangulation: one simplex conv({0} and the facet's vertices)
// per facet. Needs a simplicial polytope with the origin inside; the
// simplex determinants then partition d! vol P exactly.
inline Triangulation cone_triangulation(const Polytope& p) {
  const int d = p.dim();
  if (!p.is_simplicial())
    throw unsupported_shape("cone_triangulation: polytope not simplicial");
  if (contains_point(p, IntVector(d, 0)) != Location::interior)
    throw precondition_error("cone_triangulation: origin not interior");

  Triangulation t;
  t.kind = TriangulationKind::full_cone;
  t.dim = d;
  Int total = 0;
  std::set<IntVector> vs;
  vs.insert(IntVector(d, 0));
  for (const auto& f : p.facets()) {
    LatticeSimplex s;
    s.vertices.push_back(IntVector(d, 0));
    IntMatrix m = IntMatrix::zero(d, d);
    for (int i = 0; i < d; ++i) {
      const IntVector& v = p.vertices()[f.vertex_indices[i]];
      s.vertices.push_back(v);
      m.rows[i] = v;
      vs.insert(v);
    }
    s.det = int_abs(determinant(m));
    if (s.det == 0) throw internal_error("cone_triangulation: flat cone");
    total += s.det;
    t.simplices.push_back(std::move(s));
  }
  if (total != normalized_volume(p))
    throw internal_error("cone_triangulation: volume not partitioned");
  t.vertex_set.assign(vs.begin(), vs.end());
  return t;
}

inline bool is_unimodular_triangulation(const Triangulation& t) {
  for (const auto& s : t.simplices)
    if (s.det != 1) return false;
  return true;
}

// h-vector of a boundary triangulation, via the face counts of the complex.
inline HVector triangulation_h_vector(const Triangulation& t, int d) {
  if (t.kind != TriangulationKind::boundary)
    throw precondition_error("triangulation_h_vector: boundary kind only");
  std::set<std::vector<IntVector>> faces;
  for (const auto& s : t.simplices) {
    const int k = static_cast<int>(s.vertices.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<IntVector> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(s.vertices[i]);
      std::sort(face.begin(), face.end());
      faces.insert(std::move(face));
    }
  }
  FVector f(d, 0);
  for (const auto& face : faces) {
    if (static_cast<int>(face.size()) > d)
      throw internal_error("triangulation_h_vector: oversized face");
    ++f[face.size() - 1];
  }
  return h_from_f(f, d);
}

struct HibiReport {
  HVector h;
  std::vector<Int> delta;
  bool holds = false;     // h_i <= delta_i for all i
  bool equality = false;  // h == delta
  bool unimodular = false;
};

// h_i <= delta_i for a boundary triangulation of a reflexive polytope, with
// equality exactly when the triangulation is unimodular. The inequality and
// the iff are theorems, so the two derived bits must match.
inline HibiReport check_hibi_inequality(const Polytope& p, const Triangulation& t) {
  if (!is_reflexive(p))
    throw precondition_error("check_hibi_inequality: polytope not reflexive");
  if (t.kind != TriangulationKind::boundary)
    throw precondition_error("check_hibi_inequality: boundary triangulation only");
  for (const auto& v : t.vertex_set)
    if (contains_point(p, v) != Location::boundary)
      throw precondition_error("check_hibi_inequality: vertex not on the boundary");

  HibiReport r;
  r.h = triangulation_h_vector(t, p.dim());
  r.delta = delta_vector(p).delta;
  r.holds = true;
  for (std::size_t i = 0; i < r.h.size(); ++i)
    if (r.h[i] > r.delta[i]) r.holds = false;
  r.equality = r.h == r.delta;
  r.unimodular = is_unimodular_triangulation(t);
  if (r.equality != r.unimodular)
    throw theorem_violation("h = delta must coincide with unimodularity");
  return r;
}

// lcm of the simplex determinants: the dilation factor at which the scaled
// triangulation becomes unimodular.
inline Int triangulation_index_lcm(const Triangulation& t) {
  if (t.simplices.empty())
    throw degenerate_input("triangulation_index_lcm: empty triangulation");
  Int f = 1;
  for (const auto& s : t.simplices) f = int_lcm(f, s.det);
  return f;
}

// Every smooth Fano polytope has a unimodular cone triangulation, and the
// cone construction above is one. Anything else is a bug.
inline bool verify_oda_theorem(const Polytope& p) {
  if (!is_smooth_fano(p))
    throw precondition_error("verify_oda_theorem: polytope not smooth Fano");
  if (!is_unimodular_triangulation(cone_triangulation(p)))
    throw theorem_violation("cone triangulation of a smooth Fano polytope not unimodular");
  return true;
}

}  // namespace latpoly
