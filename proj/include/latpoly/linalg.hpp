#pragma once

#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/integers.hpp"

namespace latpoly {

using IntVector = std::vector<Int>;

struct IntMatrix {
  std::vector<IntVector> rows;

  IntMatrix() = default;
  explicit IntMatrix(std::vector<IntVector> r) : rows(std::move(r)) {}

  int nrows() const { return static_cast<int>(rows.size()); }
  int ncols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  static IntMatrix identity(int n) {
    IntMatrix m;
    m.rows.assign(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
  }

  static IntMatrix zero(int r, int c) {
    IntMatrix m;
    m.rows.assign(r, IntVector(c, 0));
    return m;
  }

  bool operator==(const IntMatrix& o) const { return rows == o.rows; }
};

inline void require_rectangular(const IntMatrix& m) {
  for (const auto& r : m.rows)
    if (static_cast<int>(r.size()) != m.ncols())
      throw dimension_error("ragged matrix");
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw dimension_error("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw dimension_error("vec_sub: size mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector vec_add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw dimension_error("vec_add: size mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector vec_neg(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVector vec_scale(const Int& c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero_vector(const IntVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector r(m.nrows());
  for (int i = 0; i < m.nrows(); ++i) r[i] = dot(m.rows[i], v);
  return r;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.ncols() != b.nrows()) throw dimension_error("mat_mul: shape mismatch");
  IntMatrix r = IntMatrix::zero(a.nrows(), b.ncols());
  for (int i = 0; i < a.nrows(); ++i)
    for (int k = 0; k < a.ncols(); ++k) {
      if (a.rows[i][k] == 0) continue;
      for (int j = 0; j < b.ncols(); ++j)
        r.rows[i][j] += a.rows[i][k] * b.rows[k][j];
    }
  return r;
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r = IntMatrix::zero(m.ncols(), m.nrows());
  for (int i = 0; i < m.nrows(); ++i)
    for (int j = 0; j < m.ncols(); ++j) r.rows[j][i] = m.rows[i][j];
  return r;
}

// Fraction-free Gaussian elimination (Bareiss). Every division below is
// exact; intermediate entries are minors of the input, so growth stays
// polynomial in the input bits.
inline Int determinant(IntMatrix m) {
  require_rectangular(m);
  const int n = m.nrows();
  if (n != m.ncols()) throw dimension_error("determinant: matrix not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m.rows[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m.rows[pivot], m.rows[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m.rows[i][j] * m.rows[k][k] - m.rows[i][k] * m.rows[k][j];
        m.rows[i][j] = exact_div(t, prev);
      }
      m.rows[i][k] = 0;
    }
    prev = m.rows[k][k];
  }
  return sign * m.rows[n - 1][n - 1];
}

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form of the input
  IntMatrix u;  // unimodular, u * input = h
};

// Row-style HNF: lower-left echelon, pivots positive, entries below each
// pivot reduced into [0, pivot). For square nonsingular input h is lower
// triangular. Plain integer Gaussian elimination with the transform
// accumulated alongside.
inline HnfResult hermite_normal_form(IntMatrix m) {
  require_rectangular(m);
  const int nr = m.nrows();
  const int nc = m.ncols();
  IntMatrix u = IntMatrix::identity(nr);

  auto combine = [&](int dst, int src, const Int& a, const Int& b,
                     const Int& c, const Int& d) {
    // (row dst, row src) <- (a*dst + b*src, c*dst + d*src); ad - bc = +-1
    for (int j = 0; j < nc; ++j) {
      Int x = a * m.rows[dst][j] + b * m.rows[src][j];
      Int y = c * m.rows[dst][j] + d * m.rows[src][j];
      m.rows[dst][j] = x;
      m.rows[src][j] = y;
    }
    for (int j = 0; j < nr; ++j) {
      Int x = a * u.rows[dst][j] + b * u.rows[src][j];
      Int y = c * u.rows[dst][j] + d * u.rows[src][j];
      u.rows[dst][j] = x;
      u.rows[src][j] = y;
    }
  };

  int row = nr - 1;
  for (int col = nc - 1; col >= 0 && row >= 0; --col) {
    bool any = false;
    for (int i = 0; i <= row; ++i)
      if (m.rows[i][col] != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    // Fold rows 0..row-1 into the pivot row; pivot entry becomes the gcd.
    for (int i = 0; i < row; ++i) {
      if (m.rows[i][col] == 0) continue;
      Xgcd e = xgcd(m.rows[row][col], m.rows[i][col]);
      Int a = exact_div(m.rows[row][col], e.g);
      Int b = exact_div(m.rows[i][col], e.g);
      // pivot row <- s*pivot + t*other; other <- a*other - b*pivot
      combine(row, i, e.s, e.t, -b, a);
    }
    if (m.rows[row][col] < 0) {
      for (int j = 0; j < nc; ++j) m.rows[row][j] = -m.rows[row][j];
      for (int j = 0; j < nr; ++j) u.rows[row][j] = -u.rows[row][j];
    }
    for (int i = row + 1; i < nr; ++i) {
      Int q = floor_div(m.rows[i][col], m.rows[row][col]);
      if (q == 0) continue;
      for (int j = 0; j < nc; ++j) m.rows[i][j] -= q * m.rows[row][j];
      for (int j = 0; j < nr; ++j) u.rows[i][j] -= q * u.rows[row][j];
    }
    --row;
  }
  return {std::move(m), std::move(u)};
}

inline int rank(const IntMatrix& m) {
  if (m.nrows() == 0) return 0;
  HnfResult r = hermite_normal_form(m);
  int rk = 0;
  for (const auto& row : r.h.rows)
    if (!is_zero_vector(row)) ++rk;
  return rk;
}

inline Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = int_gcd(g, x);
  return g;
}

// v / gcd(v), direction preserved. Zero vector is an error.
inline IntVector primitive_vector(const IntVector& v) {
  Int g = content(v);
  if (g == 0) throw degenerate_input("primitive_vector: zero vector");
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

// d vectors form a basis of Z^d iff their determinant is a unit.
inline bool is_unimodular_basis(const std::vector<IntVector>& vs) {
  if (vs.empty()) throw dimension_error("is_unimodular_basis: empty set");
  const std::size_t d = vs[0].size();
  if (vs.size() != d) throw dimension_error("is_unimodular_basis: need d vectors in Z^d");
  IntMatrix m;
  m.rows = vs;
  Int det = determinant(m);
  return det == 1 || det == -1;
}

// Adjugate: m * adjugate(m) = det(m) * I, entries are signed cofactors.
inline IntMatrix adjugate(const IntMatrix& m) {
  require_rectangular(m);
  const int n = m.nrows();
  if (n != m.ncols()) throw dimension_error("adjugate: not square");
  IntMatrix adj = IntMatrix::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor = IntMatrix::zero(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.rows[rr][cc] = m.rows[r][c];
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) & 1) cof = -cof;
      adj.rows[i][j] = cof;
    }
  return adj;
}

// Adjugate-based inverse; requires |det| = 1 so the inverse is integral.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  Int det = determinant(m);
  if (det != 1 && det != -1)
    throw precondition_error("unimodular_inverse: |det| != 1");
  IntMatrix inv = adjugate(m);
  if (det == -1)
    for (auto& row : inv.rows)
      for (auto& x : row) x = -x;
  return inv;
}

// Vector orthogonal to d-1 given vectors in Z^d, by cofactor expansion.
// All-zero result means the inputs are linearly dependent. For d = 1
// (no inputs) the convention is (1).
inline IntVector cross_normal(const std::vector<IntVector>& diffs) {
  const int d = static_cast<int>(diffs.size()) + 1;
  for (const auto& r : diffs)
    if (static_cast<int>(r.size()) != d)
      throw dimension_error("cross_normal: need d-1 vectors of length d");
  IntVector n(d);
  for (int j = 0; j < d; ++j) {
    IntMatrix minor = IntMatrix::zero(d - 1, d - 1);
    for (int r = 0; r < d - 1; ++r)
      for (int c = 0, cc = 0; c < d; ++c) {
        if (c == j) continue;
        minor.rows[r][cc++] = diffs[r][c];
      }
    Int m = determinant(minor);
    n[j] = (j & 1) ? -m : m;
  }
  return n;
}

// For primitive a, a unimodular frame adapted to the hyperplane <a, x> = 0:
// rows 0..d-2 are a lattice basis of the hyperplane lattice, the last row u
// has <a, u> = 1. Built from the HNF transform of a as a column.
inline IntMatrix hyperplane_frame(const IntVector& a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) throw dimension_error("hyperplane_frame: empty vector");
  IntMatrix col = IntMatrix::zero(d, 1);
  for (int i = 0; i < d; ++i) col.rows[i][0] = a[i];
  HnfResult r = hermite_normal_form(std::move(col));
  if (r.h.rows[d - 1][0] != 1)
    throw precondition_error("hyperplane_frame: vector not primitive");
  for (int i = 0; i + 1 < d; ++i)
    if (r.h.rows[i][0] != 0) throw internal_error("hyperplane_frame: bad HNF");
  return r.u;
}

}  // namespace latpoly
