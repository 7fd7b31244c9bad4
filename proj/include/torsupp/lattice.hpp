#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "torsupp/matrix.hpp"
#include "torsupp/rational.hpp"

namespace torsupp {

// A sublattice of Z^ambient_dim. The basis is stored as the nonzero rows of the
// row Hermite Normal Form, so two equal lattices have identical representations.
struct Lattice {
  int ambient_dim = 0;
  IntMatrix basis;  // rank x ambient_dim, HNF rows, linearly independent

  Lattice() = default;
  explicit Lattice(int dim) : ambient_dim(dim), basis(0, dim) {}

  int rank() const { return basis.rows; }

  static Lattice from_generators(int dim, const IntMatrix& gens) {
    if (gens.cols != dim) throw std::invalid_argument("generator length mismatch");
    IntMatrix h = hnf(gens).h;
    int k = 0;
    while (k < h.rows && !h.row_is_zero(k)) ++k;
    Lattice l;
    l.ambient_dim = dim;
    l.basis = IntMatrix(k, dim);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < dim; ++j) l.basis.at(i, j) = h.at(i, j);
    return l;
  }

  static Lattice full(int dim) { return from_generators(dim, IntMatrix::identity(dim)); }

  friend bool operator==(const Lattice& x, const Lattice& y) {
    return x.ambient_dim == y.ambient_dim && x.basis == y.basis;
  }
  friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }
};

// Rows spanning { x in Z^m.cols : m * x = 0 }. The result is saturated.
inline IntMatrix int_kernel(const IntMatrix& m) {
  // Rows u of the HNF transform of m^T with zero image satisfy m * u^T = 0.
  HnfResult res = hnf(m.transpose());
  std::vector<int> zero_rows;
  for (int i = 0; i < res.h.rows; ++i)
    if (res.h.row_is_zero(i)) zero_rows.push_back(i);
  IntMatrix k(int(zero_rows.size()), m.cols);
  for (size_t t = 0; t < zero_rows.size(); ++t)
    for (int j = 0; j < m.cols; ++j) k.at(int(t), j) = res.u.at(zero_rows[t], j);
  return k;
}

// Saturation { v in Z^n : k*v in l for some k > 0 }; the double integer
// orthogonal complement of the row space.
inline Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  IntMatrix complement = int_kernel(l.basis);   // vectors orthogonal to l
  IntMatrix sat = int_kernel(complement);       // vectors orthogonal to those
  return Lattice::from_generators(l.ambient_dim, sat);
}

inline bool lattice_contains(const Lattice& l, const std::vector<Int>& v) {
  if (int(v.size()) != l.ambient_dim) throw std::invalid_argument("vector dimension mismatch");
  QMat basis = qmat_from(l.basis);
  auto coords = in_row_space(basis, qvec_from(v));
  if (!coords) return false;
  for (const Rat& c : *coords)
    if (!is_integer(c)) return false;
  return true;
}

inline bool lattice_subset(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim != sup.ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
  for (int i = 0; i < sub.rank(); ++i)
    if (!lattice_contains(sup, sub.basis.row(i))) return false;
  return true;
}

// Index [sup : sub]; absent result encodes an infinite index (rank drop).
// Throws when sub is not contained in sup.
inline std::optional<Int> lattice_index(const Lattice& sub, const Lattice& sup) {
  if (!lattice_subset(sub, sup)) throw std::invalid_argument("lattice_index: sub not inside sup");
  if (sub.rank() < sup.rank()) return std::nullopt;
  // express sub's basis in sup's basis; integer entries since sub <= sup
  int k = sup.rank();
  IntMatrix c(k, k);
  QMat sup_basis = qmat_from(sup.basis);
  for (int i = 0; i < k; ++i) {
    auto coords = in_row_space(sup_basis, qvec_from(sub.basis.row(i)));
    for (int j = 0; j < k; ++j) {
      if (!is_integer((*coords)[j])) throw std::logic_error("non-integral basis coordinates");
      c.at(i, j) = (*coords)[j].get_num();
    }
  }
  Int d = det(c);
  return d < 0 ? Int(-d) : d;
}

// Inverse of a unimodular integer matrix, exactly.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  QMat sys = qmat_from(m);
  IntMatrix inv(n, n);
  for (int col = 0; col < n; ++col) {
    QVec e(n, Rat(0));
    e[col] = 1;
    auto sol = solve_affine_rational(sys, e);
    if (!sol) throw std::invalid_argument("matrix not invertible");
    for (int i = 0; i < n; ++i) {
      if (!is_integer(sol->point[i])) throw std::invalid_argument("matrix not unimodular");
      inv.at(i, col) = sol->point[i].get_num();
    }
  }
  return inv;
}

}  // namespace torsupp
