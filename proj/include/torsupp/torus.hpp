#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsupp/lattice.hpp"
#include "torsupp/matrix.hpp"
#include "torsupp/rational.hpp"

namespace torsupp {

// A torsion-translated subtorus of (C*)^dim in canonical form:
//   { t : t^b = e^{2 pi i chi(b)} for all b in lattice },
// where the lattice is saturated (the set is irreducible of dimension
// dim - rank) and chi: lattice -> Q/Z is recorded on the HNF basis rows.
// Saturated lattice + HNF basis + reduced torsion values make the
// representation unique, so equality is structural equality.
struct TorsionCoset {
  int ambient_dim = 0;
  Lattice lattice;
  std::vector<QZ> torsion;  // one value per basis row

  int dim() const { return ambient_dim - lattice.rank(); }
  bool is_point() const { return dim() == 0; }
  bool is_full_torus() const { return lattice.rank() == 0; }

  friend bool operator==(const TorsionCoset& a, const TorsionCoset& b) {
    return a.ambient_dim == b.ambient_dim && a.lattice == b.lattice && a.torsion == b.torsion;
  }
  friend bool operator!=(const TorsionCoset& a, const TorsionCoset& b) { return !(a == b); }
};

inline TorsionCoset full_torus(int dim) {
  TorsionCoset c;
  c.ambient_dim = dim;
  c.lattice = Lattice(dim);
  return c;
}

inline int cmp_coset(const TorsionCoset& a, const TorsionCoset& b) {
  if (a.lattice.rank() != b.lattice.rank()) return a.lattice.rank() < b.lattice.rank() ? -1 : 1;
  int c = cmp_vec(a.lattice.basis.a, b.lattice.basis.a);
  if (c != 0) return c;
  for (size_t i = 0; i < a.torsion.size(); ++i) {
    if (a.torsion[i] != b.torsion[i]) return a.torsion[i] < b.torsion[i] ? -1 : 1;
  }
  return 0;
}

// chi(v) for v in the coset's lattice, extended additively from the basis rows.
inline QZ coset_character(const TorsionCoset& c, const std::vector<Int>& v) {
  QMat basis = qmat_from(c.lattice.basis);
  auto coords = in_row_space(basis, qvec_from(v));
  if (!coords) throw std::invalid_argument("vector outside the coset's character lattice span");
  QZ out;
  for (size_t i = 0; i < coords->size(); ++i) {
    if (!is_integer((*coords)[i])) throw std::invalid_argument("vector outside the character lattice");
    out = out + (*coords)[i].get_num() * c.torsion[i];
  }
  return out;
}

// inner subset of outer: the character constraints of outer must hold on inner,
// i.e. outer's lattice sits inside inner's and the torsion agrees there.
inline bool coset_contains(const TorsionCoset& outer, const TorsionCoset& inner) {
  if (outer.ambient_dim != inner.ambient_dim)
    throw std::invalid_argument("coset ambient dimension mismatch");
  if (!lattice_subset(outer.lattice, inner.lattice)) return false;
  for (int i = 0; i < outer.lattice.rank(); ++i) {
    if (coset_character(inner, outer.lattice.basis.row(i)) != outer.torsion[i]) return false;
  }
  return true;
}

// Membership of an explicit torsion point t = e^{2 pi i q}.
inline bool coset_contains_point(const TorsionCoset& c, const std::vector<QZ>& q) {
  if (int(q.size()) != c.ambient_dim) throw std::invalid_argument("point dimension mismatch");
  for (int i = 0; i < c.lattice.rank(); ++i) {
    QZ val;
    for (int j = 0; j < c.ambient_dim; ++j) val = val + c.lattice.basis.at(i, j) * q[j];
    if (val != c.torsion[i]) return false;
  }
  return true;
}

// Finite union of irreducible torsion cosets, irredundant and canonically sorted.
struct CosetUnion {
  int ambient_dim = 0;
  std::vector<TorsionCoset> components;

  bool empty() const { return components.empty(); }

  friend bool operator==(const CosetUnion& a, const CosetUnion& b) {
    return a.ambient_dim == b.ambient_dim && a.components == b.components;
  }
  friend bool operator!=(const CosetUnion& a, const CosetUnion& b) { return !(a == b); }
};

inline void canonicalize(CosetUnion& u) {
  std::vector<TorsionCoset> kept;
  for (auto& c : u.components) {
    bool absorbed = false;
    for (auto& k : kept)
      if (coset_contains(k, c)) {
        absorbed = true;
        break;
      }
    if (absorbed) continue;
    std::erase_if(kept, [&](const TorsionCoset& k) { return coset_contains(c, k); });
    kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(),
            [](const TorsionCoset& a, const TorsionCoset& b) { return cmp_coset(a, b) < 0; });
  u.components = std::move(kept);
}

inline CosetUnion make_union(int dim, std::vector<TorsionCoset> comps) {
  CosetUnion u;
  u.ambient_dim = dim;
  u.components = std::move(comps);
  canonicalize(u);
  return u;
}

// A single multiplicative character constraint t^a = e^{2 pi i zeta}.
struct CharConstraint {
  std::vector<Int> exponents;
  QZ zeta;
};

// Exact solution set of a finite system of character constraints, as a finite
// union of irreducible torsion cosets. Let L be the lattice spanned by the
// exponent vectors; the system is consistent iff the assigned torsion is a
// well-defined homomorphism on L, and then each of the [sat(L):L] extensions of
// it to the saturation contributes one component.
inline CosetUnion solve_character_constraints(int dim, const std::vector<CharConstraint>& cons) {
  for (auto& c : cons)
    if (int(c.exponents.size()) != dim)
      throw std::invalid_argument("constraint exponent length mismatch");

  int m = int(cons.size());
  IntMatrix A(m, dim);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < dim; ++j) A.at(i, j) = cons[i].exponents[j];

  HnfResult hr = hnf(A);
  int k = 0;
  while (k < hr.h.rows && !hr.h.row_is_zero(k)) ++k;

  // torsion value transported along each transform row
  auto transported = [&](int i) {
    QZ val;
    for (int j = 0; j < m; ++j) val = val + hr.u.at(i, j) * cons[j].zeta;
    return val;
  };
  // rows mapping to zero span the relations among the constraints
  for (int i = k; i < m; ++i)
    if (!transported(i).is_zero()) return CosetUnion{dim, {}};

  if (k == 0) return make_union(dim, {full_torus(dim)});

  IntMatrix lb(k, dim);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < dim; ++j) lb.at(i, j) = hr.h.at(i, j);
  Lattice span = Lattice::from_generators(dim, lb);
  std::vector<QZ> chi_span(k);
  for (int i = 0; i < k; ++i) chi_span[i] = transported(i);

  Lattice sat = saturate(span);

  // span's basis in sat's coordinates
  IntMatrix c(k, k);
  QMat sat_basis = qmat_from(sat.basis);
  for (int i = 0; i < k; ++i) {
    auto coords = in_row_space(sat_basis, qvec_from(span.basis.row(i)));
    for (int j = 0; j < k; ++j) c.at(i, j) = (*coords)[j].get_num();
  }
  SnfResult sr = snf(c);  // sr.u * c * sr.v = diag(d_1..d_k)

  // aligned bases: mu_i = d_i * lam_i with mu = sr.u * span.basis and
  // lam = sr.v^{-1} * sat.basis
  IntMatrix vinv = inverse_unimodular(sr.v);
  IntMatrix lam = vinv * sat.basis;
  std::vector<QZ> chi_mu(k);
  for (int i = 0; i < k; ++i) {
    QZ val;
    for (int j = 0; j < k; ++j) val = val + sr.u.at(i, j) * chi_span[j];
    chi_mu[i] = val;
  }

  std::vector<Int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = sr.d.at(i, i);
    if (d[i] <= 0) throw std::logic_error("degenerate invariant factor");
  }

  // enumerate the extensions chi~(lam_i) = (chi(mu_i) + j_i) / d_i
  std::vector<TorsionCoset> comps;
  std::vector<Int> choice(k, Int(0));
  for (;;) {
    std::vector<QZ> chi_lam(k);
    for (int i = 0; i < k; ++i)
      chi_lam[i] = QZ(make_rat(chi_mu[i].value.get_num() + choice[i] * chi_mu[i].value.get_den(),
                               chi_mu[i].value.get_den() * d[i]));
    // express the HNF basis rows of sat in the lam rows: sat.basis = sr.v * lam
    TorsionCoset tc;
    tc.ambient_dim = dim;
    tc.lattice = sat;
    tc.torsion.resize(k);
    for (int t = 0; t < k; ++t) {
      QZ val;
      for (int i = 0; i < k; ++i) val = val + sr.v.at(t, i) * chi_lam[i];
      tc.torsion[t] = val;
    }
    comps.push_back(std::move(tc));

    int pos = k - 1;
    while (pos >= 0) {
      choice[pos] += 1;
      if (choice[pos] < d[pos]) break;
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return make_union(dim, std::move(comps));
}

// ---------------------------------------------------------------------------
// Exp of rational affine subspaces.

// An affine subspace of C^dim presented by forms a.s + c = 0 with integer
// coefficient vectors a and rational constants c.
struct AffineConstraint {
  std::vector<Int> coeffs;
  Rat constant;
};

// Zariski closure of Exp(sub), sub = intersection of the given affine
// hyperplanes: the coset cut by the saturation of the span of the coefficient
// vectors, with chi(b) = b . s0 mod 1 for any rational point s0 of sub.
inline TorsionCoset exp_affine(int dim, const std::vector<AffineConstraint>& forms) {
  QMat a(forms.size(), QVec(dim));
  QVec b(forms.size());
  IntMatrix coeff_rows(int(forms.size()), dim);
  for (size_t i = 0; i < forms.size(); ++i) {
    if (int(forms[i].coeffs.size()) != dim)
      throw std::invalid_argument("exp_affine: form length mismatch");
    for (int j = 0; j < dim; ++j) {
      a[i][j] = Rat(forms[i].coeffs[j]);
      coeff_rows.at(int(i), j) = forms[i].coeffs[j];
    }
    b[i] = -forms[i].constant;
  }
  auto sol = solve_affine_rational(a, b, dim);
  if (!sol) throw std::invalid_argument("exp_affine: empty affine subspace");

  Lattice sat = saturate(Lattice::from_generators(dim, coeff_rows));
  TorsionCoset c;
  c.ambient_dim = dim;
  c.lattice = sat;
  c.torsion.resize(sat.rank());
  for (int i = 0; i < sat.rank(); ++i) {
    Rat dot(0);
    for (int j = 0; j < dim; ++j) dot += Rat(sat.basis.at(i, j)) * sol->point[j];
    c.torsion[i] = QZ(dot);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Monomial-map preimages.

// phi_M : (C*)^p -> (C*)^r, lambda |-> (prod_k lambda_k^{m_kj})_j for M (p x r).
// Characters pull back by t^a |-> lambda^{M a}, so the preimage of a coset is
// the solution set of the pulled-back constraints.
inline CosetUnion preimage_monomial(const IntMatrix& m, const CosetUnion& u) {
  if (m.cols != u.ambient_dim) throw std::invalid_argument("preimage: shape mismatch");
  std::vector<TorsionCoset> comps;
  for (const auto& c : u.components) {
    std::vector<CharConstraint> cons;
    for (int i = 0; i < c.lattice.rank(); ++i)
      cons.push_back({mat_vec(m, c.lattice.basis.row(i)), c.torsion[i]});
    CosetUnion piece = solve_character_constraints(m.rows, cons);
    for (auto& pc : piece.components) comps.push_back(std::move(pc));
  }
  return make_union(m.rows, std::move(comps));
}

// ---------------------------------------------------------------------------
// Set operations.

inline CosetUnion union_of(const CosetUnion& a, const CosetUnion& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("union: dimension mismatch");
  std::vector<TorsionCoset> comps = a.components;
  comps.insert(comps.end(), b.components.begin(), b.components.end());
  return make_union(a.ambient_dim, std::move(comps));
}

// Valid because components are irreducible: an irreducible closed set inside a
// finite union lies inside one member.
inline bool includes(const CosetUnion& a, const CosetUnion& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("includes: dimension mismatch");
  for (const auto& cb : b.components) {
    bool inside = false;
    for (const auto& ca : a.components)
      if (coset_contains(ca, cb)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

inline bool equal_sets(const CosetUnion& a, const CosetUnion& b) {
  return includes(a, b) && includes(b, a);
}

// First component of b not covered by a, if any.
inline std::optional<TorsionCoset> first_uncovered(const CosetUnion& a, const CosetUnion& b) {
  for (const auto& cb : b.components) {
    bool inside = false;
    for (const auto& ca : a.components)
      if (coset_contains(ca, cb)) {
        inside = true;
        break;
      }
    if (!inside) return cb;
  }
  return std::nullopt;
}

inline CosetUnion intersect_cosets(const TorsionCoset& a, const TorsionCoset& b) {
  std::vector<CharConstraint> cons;
  for (int i = 0; i < a.lattice.rank(); ++i)
    cons.push_back({a.lattice.basis.row(i), a.torsion[i]});
  for (int i = 0; i < b.lattice.rank(); ++i)
    cons.push_back({b.lattice.basis.row(i), b.torsion[i]});
  return solve_character_constraints(a.ambient_dim, cons);
}

inline CosetUnion intersect(const CosetUnion& a, const CosetUnion& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<TorsionCoset> comps;
  for (const auto& ca : a.components)
    for (const auto& cb : b.components) {
      CosetUnion piece = intersect_cosets(ca, cb);
      for (auto& c : piece.components) comps.push_back(std::move(c));
    }
  return make_union(a.ambient_dim, std::move(comps));
}

// ---------------------------------------------------------------------------
// Diagonal restriction.

// Either all of C* or a finite set of roots of unity e^{2 pi i q}.
struct EigenvalueSet {
  bool all_of_c_star = false;
  std::vector<QZ> values;  // sorted, deduplicated; empty when all_of_c_star

  friend bool operator==(const EigenvalueSet& a, const EigenvalueSet& b) {
    return a.all_of_c_star == b.all_of_c_star && a.values == b.values;
  }
};

// Restriction to the diagonal t_1 = ... = t_r via the all-ones monomial map.
inline EigenvalueSet restrict_to_diagonal(const CosetUnion& u) {
  IntMatrix ones(1, u.ambient_dim);
  for (int j = 0; j < u.ambient_dim; ++j) ones.at(0, j) = 1;
  CosetUnion diag = preimage_monomial(ones, u);
  EigenvalueSet out;
  for (const auto& c : diag.components) {
    if (c.is_full_torus()) {
      out.all_of_c_star = true;
      out.values.clear();
      return out;
    }
    // ambient dim 1, rank 1, saturated: the basis is [[1]] and the coset is a point
    out.values.push_back(c.torsion[0]);
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

}  // namespace torsupp
