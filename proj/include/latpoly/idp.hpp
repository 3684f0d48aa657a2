#pragma once

// Integer decomposition property, verified level by level: a point of the
// c-th dilate passes if it is a sum of c lattice points of P. Levels are
// checked by iterated sumsets; every level up to c_max is evaluated even
// after a failure, since failures need not be monotone in c.

#include <optional>
#include <set>
#include <vector>

#include "latpoly/ehrhart.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/linalg.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct IdpLevel {
  int c = 0;
  Int points_checked = 0;
  std::vector<IntVector> failures;  // undecomposable points, lex order
};

struct IdpReport {
  int c_max = 0;
  std::vector<IdpLevel> per_level;
  bool holds_up_to_c_max = false;
};

inline IdpReport idp_check(const Polytope& p, int c_max) {
  if (c_max < 1) throw precondition_error("idp_check: c_max must be positive");
  IdpReport r;
  r.c_max = c_max;
  r.holds_up_to_c_max = true;

  const std::vector<IntVector> s1 = count_lattice_points(p, 1, true).points;
  std::set<IntVector> reachable(s1.begin(), s1.end());

  for (int c = 1; c <= c_max; ++c) {
    const std::vector<IntVector> target = count_lattice_points(p, c, true).points;
    if (c > 1) {
      std::set<IntVector> next;
      for (const auto& a : reachable)
        for (const auto& b : s1) {
          IntVector sum = vec_add(a, b);
          if (contains_point(p, sum, c) != Location::outside)
            next.insert(std::move(sum));
        }
      reachable = std::move(next);
    }
    IdpLevel level;
    level.c = c;
    level.points_checked = static_cast<long>(target.size());
    for (const auto& z : target)
      if (!reachable.count(z)) level.failures.push_back(z);
    if (!level.failures.empty()) r.holds_up_to_c_max = false;
    r.per_level.push_back(std::move(level));
  }
  return r;
}

// A decomposition z = x_1 + ... + x_c with every part a lattice point of P,
// or nothing when no such decomposition exists. Deterministic: x_1 is the
// lexicographically smallest workable part, then recurse on the remainder.
inline std::optional<std::vector<IntVector>> decompose_point(const Polytope& p,
                                                             const IntVector& z,
                                                             int c) {
  if (c < 1) throw precondition_error("decompose_point: c must be positive");
  if (contains_point(p, z, c) == Location::outside)
    throw precondition_error("decompose_point: point not in the dilate");

  const std::vector<IntVector> s1 = count_lattice_points(p, 1, true).points;
  std::vector<std::set<IntVector>> reach(c + 1);
  reach[1].insert(s1.begin(), s1.end());
  for (int j = 2; j <= c; ++j)
    for (const auto& a : reach[j - 1])
      for (const auto& b : s1) {
        IntVector sum = vec_add(a, b);
        if (contains_point(p, sum, j) != Location::outside)
          reach[j].insert(std::move(sum));
      }
  if (!reach[c].count(z)) return std::nullopt;

  std::vector<IntVector> parts;
  IntVector rest = z;
  for (int j = c; j >= 2; --j) {
    bool found = false;
    for (const auto& x : s1) {  // lex order gives the smallest part first
      if (reach[j - 1].count(vec_sub(rest, x))) {
        parts.push_back(x);
        rest = vec_sub(rest, x);
        found = true;
        break;
      }
    }
    if (!found) throw internal_error("decompose_point: reachable set lied");
  }
  parts.push_back(rest);

  IntVector total(p.dim(), 0);
  for (const auto& x : parts) {
    if (contains_point(p, x) == Location::outside)
      throw internal_error("decompose_point: part outside the polytope");
    total = vec_add(total, x);
  }
  if (total != z) throw internal_error("decompose_point: parts do not sum");
  return parts;
}

}  // namespace latpoly
