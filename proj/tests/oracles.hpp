// Test-only independent oracles. Everything here checks library results by a
// different route than the implementation under test: finite torsion-point
// enumeration for coset set operations, and Whitney's subset expansion for
// characteristic polynomials.
#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "torsupp/arrangement.hpp"
#include "torsupp/torus.hpp"

namespace torsupp::testing {

inline bool affine_consistent(const std::vector<AffineConstraint>& forms, int dim) {
  QMat a(forms.size(), QVec(dim));
  QVec b(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    for (int j = 0; j < dim; ++j) a[i][j] = Rat(forms[i].coeffs[j]);
    b[i] = -forms[i].constant;
  }
  return solve_affine_rational(a, b, dim).has_value();
}

// Direct membership from the defining character equations.
inline bool oracle_member(const CosetUnion& u, const std::vector<QZ>& q) {
  for (const auto& c : u.components)
    if (coset_contains_point(c, q)) return true;
  return false;
}

inline long lcm_long(long a, long b) {
  long g = std::gcd(a, b);
  return a / g * b;
}

// Grid order: twice the lcm of every torsion order appearing in either union.
inline long oracle_grid_order(const CosetUnion& a, const CosetUnion& b) {
  long n = 1;
  for (const CosetUnion* u : {&a, &b})
    for (const auto& c : u->components)
      for (const auto& t : c.torsion) n = lcm_long(n, t.order().get_si());
  return 2 * n;
}

// int64 view of a coset union for fast grid scans. A grid point is idx/n with
// idx in {0..n-1}^dim; membership in a component means, for each basis row b
// with torsion p/q:  q * (b . idx) == p * n  (mod q * n).
struct GridView {
  struct Row {
    std::vector<long> b;
    long p, q;
  };
  std::vector<std::vector<Row>> comps;

  GridView(const CosetUnion& u) {
    for (const auto& c : u.components) {
      std::vector<Row> rows;
      for (int i = 0; i < c.lattice.rank(); ++i) {
        Row r;
        for (int j = 0; j < c.ambient_dim; ++j) r.b.push_back(c.lattice.basis.at(i, j).get_si());
        r.p = c.torsion[i].value.get_num().get_si();
        r.q = c.torsion[i].value.get_den().get_si();
        rows.push_back(std::move(r));
      }
      comps.push_back(std::move(rows));
    }
  }

  bool member(const std::vector<long>& idx, long n) const {
    for (const auto& rows : comps) {
      bool ok = true;
      for (const auto& r : rows) {
        long dot = 0;
        for (size_t j = 0; j < idx.size(); ++j) dot += r.b[j] * idx[j];
        long lhs = ((r.q * dot - r.p * n) % (r.q * n) + r.q * n) % (r.q * n);
        if (lhs != 0) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }
};

// Evaluates pred on every point of the N-torsion grid of (C*)^dim; returns
// false at the first failure.
inline bool agree_on_grid(long n, int dim,
                          const std::function<bool(const std::vector<long>&, long)>& pred) {
  std::vector<long> idx(dim, 0);
  for (;;) {
    if (!pred(idx, n)) return false;
    int pos = dim - 1;
    while (pos >= 0) {
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
  }
}

// Searches the torsion points of the coset c (of order dividing n, 2n, 3n, ...)
// for one outside the union a. Torsion points are Zariski dense in c, and a
// does not contain c, so the search terminates.
inline std::optional<std::vector<QZ>> torsion_point_outside(const TorsionCoset& c,
                                                            const CosetUnion& a, long n) {
  int dim = c.ambient_dim;
  // base torsion point of c: solve basis . q = torsion over Q
  QMat sys(c.lattice.rank(), QVec(dim));
  QVec rhs(c.lattice.rank());
  for (int i = 0; i < c.lattice.rank(); ++i) {
    for (int j = 0; j < dim; ++j) sys[i][j] = Rat(c.lattice.basis.at(i, j));
    rhs[i] = c.torsion[i].value;
  }
  auto sol = solve_affine_rational(sys, rhs, dim);
  if (!sol) return std::nullopt;
  // directions of the underlying subtorus: integer kernel of the lattice basis
  IntMatrix dirs = int_kernel(c.lattice.basis);
  int d = dirs.rows;

  for (long mult = 1; mult <= 64; ++mult) {
    long m = n * mult;
    std::vector<long> idx(d, 0);
    for (;;) {
      std::vector<QZ> q(dim);
      for (int j = 0; j < dim; ++j) {
        Rat v = sol->point[j];
        for (int i = 0; i < d; ++i) v += make_rat(Int(idx[i]) * dirs.at(i, j), Int(m));
        q[j] = QZ(v);
      }
      if (!oracle_member(a, q)) return q;
      int pos = d - 1;
      while (pos >= 0) {
        if (++idx[pos] < m) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    if (d == 0) break;  // a point coset: the single candidate was tried
  }
  return std::nullopt;
}

// Whitney's subset expansion of the characteristic polynomial of the
// restriction to an edge: sum over subsets S of the through-set of
// (-1)^{|S|} t^{codim(w) - rank(S)}. Independent of the Mobius recursion.
inline TPoly whitney_char_poly(const MultiArrangement& a, const Edge& w) {
  int m = int(w.through.size());
  if (m > 20) throw std::invalid_argument("whitney oracle: through-set too large");
  TPoly poly(w.codim + 1, Int(0));
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    QMat rows;
    int bits = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1ul << i)) {
        ++bits;
        QVec row(a.n);
        for (int j = 0; j < a.n; ++j)
          row[j] = Rat(a.hyperplanes[w.through[i]].form.coeffs[j]);
        rows.push_back(std::move(row));
      }
    int rk = rank(rows);
    poly[w.codim - rk] += (bits % 2 == 0) ? 1 : -1;
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

// Random multi-arrangement: distinct normalized forms with small entries.
inline MultiArrangement random_arrangement(std::mt19937& rng, int n, int r, int max_hyps,
                                           bool central) {
  std::uniform_int_distribution<int> coef(-2, 2), multd(0, 2);
  MultiArrangement a;
  a.n = n;
  a.r = r;
  int want = 1 + int(rng() % max_hyps);
  int guard = 0;
  while (int(a.hyperplanes.size()) < want && ++guard < 200) {
    std::vector<Int> coeffs(n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      coeffs[j] = coef(rng);
      nonzero = nonzero || coeffs[j] != 0;
    }
    if (!nonzero) continue;
    Rat c = central ? Rat(0) : Rat(coef(rng));
    LinForm f = make_form(std::move(coeffs), c);
    bool dup = false;
    for (const auto& h : a.hyperplanes)
      if (h.form == f) dup = true;
    if (dup) continue;
    std::vector<Int> mults(r);
    bool some = false;
    for (int j = 0; j < r; ++j) {
      mults[j] = multd(rng);
      some = some || mults[j] != 0;
    }
    if (!some) mults[int(rng() % r)] = 1;
    a.hyperplanes.push_back({std::move(f), std::move(mults)});
  }
  validate(a);
  return a;
}

// Random nonnegative p x r matrix with positive column sums (non-degenerate).
inline IntMatrix random_nondegenerate_matrix(std::mt19937& rng, int p, int r, int bound) {
  std::uniform_int_distribution<int> d(0, bound);
  IntMatrix m(p, r);
  for (int j = 0; j < r; ++j) {
    Int colsum(0);
    for (int i = 0; i < p; ++i) {
      m.at(i, j) = d(rng);
      colsum += m.at(i, j);
    }
    if (colsum == 0) m.at(int(rng() % p), j) = 1 + d(rng);
  }
  return m;
}

// Integer solvability of A c = d (A integer rows, d rational), via SNF.
inline bool has_integer_solution(const IntMatrix& a, const QVec& d) {
  for (const Rat& x : d)
    if (!is_integer(x)) return false;
  SnfResult s = snf(a);
  // A = U^{-1} D V^{-1}; solve D y = U d, c = V y
  std::vector<Rat> ud(a.rows, Rat(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) ud[i] += Rat(s.u.at(i, j)) * d[j];
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    Rat di = i < n ? Rat(s.d.at(i, i)) : Rat(0);
    if (di == 0) {
      if (ud[i] != 0) return false;
    } else if (!is_integer(ud[i] / di)) {
      return false;
    }
  }
  return true;
}

// Equality of affine subspaces up to translation by an integer vector.
inline bool equal_mod_integer_translation(const AffineSubspace& s1, const AffineSubspace& s2) {
  if (s1.dim != s2.dim || s1.forms.size() != s2.forms.size()) return false;
  for (size_t i = 0; i < s1.forms.size(); ++i)
    if (s1.forms[i].coeffs != s2.forms[i].coeffs) return false;  // same canonical linear parts
  IntMatrix a(int(s1.forms.size()), s1.dim);
  QVec d(s1.forms.size());
  for (size_t i = 0; i < s1.forms.size(); ++i) {
    for (int j = 0; j < s1.dim; ++j) a.at(int(i), j) = s1.forms[i].coeffs[j];
    d[i] = s2.forms[i].constant - s1.forms[i].constant;
  }
  return has_integer_solution(a, d);
}

// Random unimodular change of coordinates applied to a multi-arrangement.
inline MultiArrangement transform(const MultiArrangement& a, const IntMatrix& t) {
  MultiArrangement out;
  out.n = a.n;
  out.r = a.r;
  for (const auto& h : a.hyperplanes) {
    // form(x) = coeffs . x + c becomes coeffs . (t x) + c = (coeffs t) . x + c
    std::vector<Int> coeffs(a.n, Int(0));
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) coeffs[k] += h.form.coeffs[j] * t.at(j, k);
    out.hyperplanes.push_back({make_form(std::move(coeffs), h.form.constant), h.mults});
  }
  validate(out);
  return out;
}

inline IntMatrix random_unimodular_matrix(std::mt19937& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int q(coef(rng));
    for (int c = 0; c < n; ++c) u.at(i, c) += q * u.at(j, c);
  }
  return u;
}

// Random irreducible-coset unions built from random character constraints.
// Components whose torsion orders exceed 6 are discarded so that the
// enumeration grids stay small (solving can raise the order of the input
// constraints by the saturation index).
inline CosetUnion random_coset_union(std::mt19937& rng, int dim, int pieces) {
  std::uniform_int_distribution<int> coef(-2, 2), dend(1, dim >= 3 ? 4 : 6);
  std::vector<TorsionCoset> comps;
  for (int piece = 0; piece < pieces; ++piece) {
    std::vector<CharConstraint> cons;
    int ncons = 1 + int(rng() % dim);
    for (int i = 0; i < ncons; ++i) {
      CharConstraint c;
      for (int j = 0; j < dim; ++j) c.exponents.push_back(Int(coef(rng)));
      int den = dend(rng);
      c.zeta = QZ(make_rat(Int(int(rng() % den)), Int(den)));
      cons.push_back(c);
    }
    auto u = solve_character_constraints(dim, cons);
    for (auto& c : u.components) {
      bool small_order = true;
      for (const auto& t : c.torsion) small_order = small_order && t.order() <= 6;
      if (small_order) comps.push_back(std::move(c));
    }
  }
  return make_union(dim, std::move(comps));
}

}  // namespace torsupp::testing
