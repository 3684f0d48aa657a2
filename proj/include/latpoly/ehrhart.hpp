#pragma once

// Lattice-point counting in dilates and the two standard repackagings of
// those counts: the interpolated counting polynomial and the delta vector
// (the numerator coefficients of the generating series, obtained from the
// counts L(0..d) by a finite alternating binomial transform).
//
// Counting is a bounding-box scan with facet classification. No cone
// decompositions: inputs are small and the scan is exact and obviously
// correct, which matters more here than asymptotics.

#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/linalg.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct LatticePointCount {
  Int m = 0;
  Int total = 0;
  Int boundary = 0;
  std::vector<IntVector> points;  // filled only when requested, lex order
};

// Exact |mP ∩ Z^d| and |∂(mP) ∩ Z^d|. The m = 0 dilate is the single point
// 0, counted as boundary.
inline LatticePointCount count_lattice_points(const Polytope& p, const Int& m,
                                              bool want_list = false) {
  if (m < 0) throw domain_error("count_lattice_points: negative dilation");
  const int d = p.dim();
  LatticePointCount out;
  out.m = m;
  if (m == 0) {
    out.total = 1;
    out.boundary = 1;
    if (want_list) out.points.push_back(IntVector(d, 0));
    return out;
  }
  IntVector lo = p.vertices()[0], hi = p.vertices()[0];
  for (const auto& v : p.vertices())
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  for (int j = 0; j < d; ++j) {
    lo[j] *= m;
    hi[j] *= m;
  }
  IntVector x = lo;
  while (true) {
    Location loc = contains_point(p, x, m);
    if (loc != Location::outside) {
      ++out.total;
      if (loc == Location::boundary) ++out.boundary;
      if (want_list) out.points.push_back(x);
    }
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++x[j];
  }
  return out;
}

struct DeltaVector {
  int dim = 0;
  std::vector<Int> delta;  // delta_0 .. delta_d
};

// delta_i = sum_{j=0..i} (-1)^j C(d+1, j) L(i-j), from the counts L(0..d).
// delta_0 = 1 and nonnegativity hold for every lattice polytope, so a
// violation can only be a counting bug.
inline DeltaVector delta_vector(const Polytope& p) {
  const int d = p.dim();
  std::vector<Int> counts(d + 1);
  for (int m = 0; m <= d; ++m) counts[m] = count_lattice_points(p, m).total;
  DeltaVector out;
  out.dim = d;
  out.delta.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    Int acc = 0;
    for (int j = 0; j <= i; ++j) {
      Int term = binomial(d + 1, j) * counts[i - j];
      acc += (j & 1) ? -term : term;
    }
    out.delta[i] = acc;
  }
  if (out.delta[0] != 1)
    throw internal_error("delta_vector: delta_0 != 1");
  for (const auto& x : out.delta)
    if (x < 0) throw internal_error("delta_vector: negative entry");
  return out;
}

struct EhrhartPolynomial {
  int dim = 0;
  std::vector<Rat> coefficients;  // c_0 .. c_d, count(m) = sum c_i m^i

  Rat evaluate(const Int& m) const {
    Rat acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;)
      acc = acc * Rat(m) + coefficients[i];
    return acc;
  }
};

// Lagrange interpolation through the exact counts at m = 0..d. The leading
// coefficient must come out as vol(P) = normalized_volume / d! and the
// constant term as 1; anything else is an internal inconsistency.
inline EhrhartPolynomial ehrhart_polynomial(const Polytope& p) {
  const int d = p.dim();
  std::vector<Int> counts(d + 1);
  for (int m = 0; m <= d; ++m) counts[m] = count_lattice_points(p, m).total;

  std::vector<Rat> coeffs(d + 1, Rat(0));
  for (int k = 0; k <= d; ++k) {
    // basis numerator prod_{j != k} (x - j), expanded with integer
    // coefficients, then scaled by counts[k] / prod_{j != k} (k - j)
    std::vector<Int> num = {1};
    Int den = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == k) continue;
      den *= Int(k - j);
      std::vector<Int> next(num.size() + 1, 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[i + 1] += num[i];
        next[i] -= num[i] * j;
      }
      num = std::move(next);
    }
    Rat scale = Rat(counts[k]) / Rat(den);
    for (std::size_t i = 0; i < num.size(); ++i)
      coeffs[i] += Rat(num[i]) * scale;
  }

  EhrhartPolynomial out;
  out.dim = d;
  out.coefficients = std::move(coeffs);
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  if (out.coefficients[d] != Rat(normalized_volume(p)) / Rat(fact))
    throw internal_error("ehrhart_polynomial: leading coefficient mismatch");
  if (out.coefficients[0] != 1)
    throw internal_error("ehrhart_polynomial: constant term != 1");
  return out;
}

// d! vol P = sum of the delta entries, both sides computed independently.
inline bool check_volume_identity(const Polytope& p) {
  Int sum = 0;
  for (const auto& x : delta_vector(p).delta) sum += x;
  return sum == normalized_volume(p);
}

}  // namespace latpoly
