#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torsupp/rational.hpp"

namespace torsupp {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Int(0)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }
  IntMatrix(int r, int c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != size_t(r) * size_t(c)) throw std::invalid_argument("entry count mismatch");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  std::vector<Int> row(int i) const {
    return std::vector<Int>(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
  }

  bool row_is_zero(int i) const {
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k) == 0) continue;
        for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }
};

inline std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (int(v.size()) != m.cols) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Int> out(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

namespace detail {

inline void row_axpy(IntMatrix& m, int dst, int src, const Int& q) {
  // row_dst -= q * row_src
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

inline void row_swap(IntMatrix& m, int i1, int i2) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i1, j), m.at(i2, j));
}

inline void row_negate(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// Replaces rows (p, i) by the unimodular gcd combination putting gcd(a, b) at (p, col)
// and 0 at (i, col), where a = m(p, col), b = m(i, col).
inline void gcd_rows(IntMatrix& m, IntMatrix& u, int p, int i, int col) {
  Int a = m.at(p, col), b = m.at(i, col);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    // plain elimination keeps the pivot row fixed, which the SNF loop relies on
    Int q = b / a;
    row_axpy(m, i, p, q);
    row_axpy(u, i, p, q);
    return;
  }
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int adg = a / g, bdg = b / g;
  auto combine = [&](IntMatrix& t) {
    for (int j = 0; j < t.cols; ++j) {
      Int rp = t.at(p, j), ri = t.at(i, j);
      t.at(p, j) = x * rp + y * ri;
      t.at(i, j) = -bdg * rp + adg * ri;
    }
  };
  combine(m);
  combine(u);
}

}  // namespace detail

struct HnfResult {
  IntMatrix h;
  IntMatrix u;  // unimodular, u*m = h
};

// Row-style Hermite Normal Form: echelon with positive pivots and entries above
// each pivot reduced into [0, pivot). This convention is the canonical form used
// for every lattice in the library.
inline HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  int p = 0;
  for (int col = 0; col < h.cols && p < h.rows; ++col) {
    for (int i = p + 1; i < h.rows; ++i) detail::gcd_rows(h, u, p, i, col);
    if (h.at(p, col) == 0) {
      // pivot row itself may be zero in this column while a lower row was too
      continue;
    }
    if (h.at(p, col) < 0) {
      detail::row_negate(h, p);
      detail::row_negate(u, p);
    }
    for (int i = 0; i < p; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(p, col).get_mpz_t());
      if (q != 0) {
        detail::row_axpy(h, i, p, q);
        detail::row_axpy(u, i, p, q);
      }
    }
    ++p;
  }
  return {std::move(h), std::move(u)};
}

struct SnfResult {
  IntMatrix d;  // diagonal, d1 | d2 | ... >= 0
  IntMatrix u;  // unimodular, u*m*v = d
  IntMatrix v;  // unimodular
};

inline SnfResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  IntMatrix v = IntMatrix::identity(m.cols);

  auto col_axpy = [&](IntMatrix& t, int dst, int src, const Int& q) {
    for (int i = 0; i < t.rows; ++i) t.at(i, dst) -= q * t.at(i, src);
  };
  auto gcd_cols = [&](int p, int j, int row) {
    Int a = d.at(row, p), b = d.at(row, j);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
      Int q = b / a;
      col_axpy(d, j, p, q);
      col_axpy(v, j, p, q);
      return;
    }
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int adg = a / g, bdg = b / g;
    auto combine = [&](IntMatrix& t) {
      for (int i = 0; i < t.rows; ++i) {
        Int cp = t.at(i, p), cj = t.at(i, j);
        t.at(i, p) = x * cp + y * cj;
        t.at(i, j) = -bdg * cp + adg * cj;
      }
    };
    combine(d);
    combine(v);
  };

  int n = std::min(d.rows, d.cols);
  for (int t = 0; t < n; ++t) {
    // move a nonzero entry of the trailing block to (t,t)
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows && pi < 0; ++i)
      for (int j = t; j < d.cols; ++j)
        if (d.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t) {
      detail::row_swap(d, pi, t);
      detail::row_swap(u, pi, t);
    }
    if (pj != t) {
      for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, pj), d.at(i, t));
      for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, pj), v.at(i, t));
    }
    for (;;) {
      for (int i = t + 1; i < d.rows; ++i) detail::gcd_rows(d, u, t, i, t);
      for (int j = t + 1; j < d.cols; ++j) gcd_cols(t, j, t);
      bool row_clear = true;
      for (int i = t + 1; i < d.rows; ++i)
        if (d.at(i, t) != 0) row_clear = false;
      if (!row_clear) continue;
      // force divisibility of the trailing block by the pivot
      int bad_i = -1, bad_j = -1;
      for (int i = t + 1; i < d.rows && bad_i < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bad_i = i;
            bad_j = j;
            break;
          }
      if (bad_i < 0) break;
      detail::row_axpy(d, t, bad_i, Int(-1));  // add offending row to pivot row
      detail::row_axpy(u, t, bad_i, Int(-1));
      (void)bad_j;
    }
    if (d.at(t, t) < 0) {
      detail::row_negate(d, t);
      detail::row_negate(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

inline Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix w = m;
  Int sign = 1, prev = 1;
  int n = m.rows;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      detail::row_swap(w, k, s);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra (dense, small systems).

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // rows

inline QMat qmat_from(const IntMatrix& m) {
  QMat q(m.rows, QVec(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) q[i][j] = Rat(m.at(i, j));
  return q;
}

// Reduced row echelon form in place; returns pivot column per pivot row.
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = int(m.size()), cols = int(m[0].size());
  int p = 0;
  for (int col = 0; col < cols && p < rows; ++col) {
    int sel = -1;
    for (int i = p; i < rows; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[p]);
    Rat inv = Rat(1) / m[p][col];
    for (int j = col; j < cols; ++j) m[p][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == p || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[p][j];
    }
    pivots.push_back(col);
    ++p;
  }
  return pivots;
}

inline int rank(QMat m) { return int(rref(m).size()); }

struct AffineSolution {
  QVec point;
  std::vector<QVec> kernel;  // basis of the homogeneous solution space
};

// Solves a*x = b exactly; absent result means the system is inconsistent.
// ncols disambiguates the variable count when the system has no equations.
inline std::optional<AffineSolution> solve_affine_rational(const QMat& a, const QVec& b,
                                                           int ncols = -1) {
  int rows = int(a.size());
  int cols = rows == 0 ? std::max(ncols, 0) : int(a[0].size());
  if (int(b.size()) != rows) throw std::invalid_argument("solve: rhs length mismatch");
  QMat aug(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int k = 0; k < int(pivots.size()); ++k)
    if (pivots[k] == cols) return std::nullopt;  // row (0 ... 0 | 1)

  AffineSolution sol;
  sol.point.assign(cols, Rat(0));
  std::vector<int> pivot_of_col(cols, -1);
  for (int k = 0; k < int(pivots.size()); ++k) pivot_of_col[pivots[k]] = k;
  for (int k = 0; k < int(pivots.size()); ++k) sol.point[pivots[k]] = aug[k][cols];
  for (int col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    QVec v(cols, Rat(0));
    v[col] = 1;
    for (int k = 0; k < int(pivots.size()); ++k) v[pivots[k]] = -aug[k][col];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

// Coordinates of v in the row space of basis (rows linearly independent), if any.
inline std::optional<QVec> in_row_space(const QMat& basis, const QVec& v) {
  int k = int(basis.size());
  if (k == 0) {
    for (const Rat& x : v)
      if (x != 0) return std::nullopt;
    return QVec{};
  }
  int n = int(basis[0].size());
  QMat sys(n, QVec(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) sys[i][j] = basis[j][i];
  auto sol = solve_affine_rational(sys, v);
  if (!sol) return std::nullopt;
  return sol->point;
}

inline QVec qvec_from(const std::vector<Int>& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

}  // namespace torsupp
