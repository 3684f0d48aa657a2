#pragma once

// Reflexivity and smoothness predicates, each backed by an equivalence
// suite that evaluates the classically equivalent criteria independently
// and compares. Disagreement inside check_smooth_fano_equivalences is a
// theorem violation (an implementation bug by definition); the reflexivity
// report records agreement and leaves judgement to the caller.

#include <set>
#include <string>
#include <vector>

#include "latpoly/ehrhart.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/linalg.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct DualDescription {
  int dim = 0;
  // one vertex a/b per facet (a, b) of the primal, in facet order
  std::vector<std::vector<Rat>> vertices;
};

// {u : <u, x> <= 1 for all x in P}, as its vertex list. Needs the origin
// strictly inside, otherwise the dual is unbounded.
inline DualDescription dual_polytope(const Polytope& p) {
  if (contains_point(p, IntVector(p.dim(), 0)) != Location::interior)
    throw precondition_error("dual_polytope: origin not interior");
  DualDescription out;
  out.dim = p.dim();
  for (const auto& f : p.facets()) {
    std::vector<Rat> v;
    for (const auto& a : f.normal) v.push_back(Rat(a) / Rat(f.offset));
    out.vertices.push_back(std::move(v));
  }
  return out;
}

// Reflexive: origin interior and every facet at lattice distance one, i.e.
// offset 1 with primitive normal. Equivalent to the dual being a lattice
// polytope. Normals out of make_polytope are primitive already, so the
// offsets decide.
inline bool is_reflexive(const Polytope& p) {
  if (contains_point(p, IntVector(p.dim(), 0)) != Location::interior)
    return false;
  for (const auto& f : p.facets())
    if (f.offset != 1) return false;
  return true;
}

struct ReflexivityReport {
  bool has_interior_origin = false;
  bool dual_is_lattice = false;
  bool volume_identity_holds = false;  // sum of facet volumes = d! vol P
  bool palindromic = false;            // delta_i = delta_{d-i}
  bool verdicts_agree = false;
};

// The three reflexivity criteria, evaluated independently: integrality of
// the dual vertices, the boundary-volume identity (d vol P = vol dP, kept
// in integers as sum_F det F = d! vol P), and palindromy of delta.
inline ReflexivityReport check_reflexive_equivalences(const Polytope& p) {
  if (contains_point(p, IntVector(p.dim(), 0)) != Location::interior)
    throw precondition_error("check_reflexive_equivalences: origin not interior");
  ReflexivityReport r;
  r.has_interior_origin = true;

  r.dual_is_lattice = true;
  for (const auto& f : p.facets())
    for (const auto& a : f.normal)
      if (a % f.offset != 0) r.dual_is_lattice = false;

  r.volume_identity_holds =
      normalized_boundary_volume(p) == normalized_volume(p);

  const std::vector<Int>& delta = delta_vector(p).delta;
  const int d = p.dim();
  r.palindromic = true;
  for (int i = 0; i <= d; ++i)
    if (delta[i] != delta[d - i]) {
      r.palindromic = false;
      break;
    }

  r.verdicts_agree = r.dual_is_lattice == r.volume_identity_holds &&
                     r.dual_is_lattice == r.palindromic;
  return r;
}

namespace detail {

inline bool facets_are_unimodular(const Polytope& p) {
  const int d = p.dim();
  for (const auto& f : p.facets()) {
    if (static_cast<int>(f.vertex_indices.size()) != d) return false;
    std::vector<IntVector> vs;
    for (int i : f.vertex_indices) vs.push_back(p.vertices()[i]);
    if (!is_unimodular_basis(vs)) return false;
  }
  return true;
}

}  // namespace detail

// Simplicial + reflexive + the d vertices of every facet form a basis of
// the lattice.
inline bool is_smooth_fano(const Polytope& p) {
  return p.is_simplicial() && is_reflexive(p) && detail::facets_are_unimodular(p);
}

// Smoothness of the vertex cones cone(P - v): every vertex must be simple
// (exactly d edges) and the primitive edge directions a lattice basis.
// This is a property of the corners, not of the facets; it neither implies
// nor is implied by is_smooth_fano. A square with a corner at the origin
// passes here and fails there; the 2-dim cross-polytope is the reverse
// (its edge-direction determinants are 2).
inline bool is_smooth_vertex_cones(const Polytope& p) {
  if (!p.is_simplicial())
    throw unsupported_shape("is_smooth_vertex_cones: polytope not simplicial");
  const int d = p.dim();
  for (int vi = 0; vi < p.n_vertices(); ++vi) {
    // neighbors of vi: in a simplicial polytope every vertex pair inside a
    // facet is an edge
    std::set<int> nbrs;
    for (const auto& f : p.facets()) {
      bool has = false;
      for (int i : f.vertex_indices)
        if (i == vi) has = true;
      if (!has) continue;
      for (int i : f.vertex_indices)
        if (i != vi) nbrs.insert(i);
    }
    if (static_cast<int>(nbrs.size()) != d) return false;  // non-simple vertex
    std::vector<IntVector> dirs;
    for (int i : nbrs)
      dirs.push_back(
          primitive_vector(vec_sub(p.vertices()[i], p.vertices()[vi])));
    if (!is_unimodular_basis(dirs)) return false;
  }
  return true;
}

struct SmoothFanoReport {
  bool is_simplicial = false;
  bool is_reflexive = false;
  bool facet_basis_ok = false;
  bool h_equals_delta = false;
  bool facets_equal_volume = false;  // f_{d-1} = d! vol P
  bool verdicts_agree = false;
  std::string note;  // set when the suite is skipped
};

// The three smooth-Fano criteria for a simplicial reflexive polytope:
// facet bases, h = delta, and f_{d-1} = d! vol. They are equivalent, so
// the suite either agrees three ways or the library has a bug.
inline SmoothFanoReport check_smooth_fano_equivalences(const Polytope& p) {
  SmoothFanoReport r;
  r.is_simplicial = p.is_simplicial();
  r.is_reflexive = is_reflexive(p);
  if (!r.is_simplicial || !r.is_reflexive) {
    r.note = "suite skipped: polytope is not simplicial reflexive";
    r.verdicts_agree = true;
    return r;
  }
  r.facet_basis_ok = detail::facets_are_unimodular(p);

  const int d = p.dim();
  HVector h = h_from_f(f_vector(p), d);
  std::vector<Int> delta = delta_vector(p).delta;
  r.h_equals_delta = h == delta;

  r.facets_equal_volume = Int(p.n_facets()) == normalized_volume(p);

  r.verdicts_agree = r.facet_basis_ok == r.h_equals_delta &&
                     r.facet_basis_ok == r.facets_equal_volume;
  if (!r.verdicts_agree)
    throw theorem_violation(
        "smooth Fano criteria disagree on a simplicial reflexive polytope");
  return r;
}

}  // namespace latpoly
