#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsupp/matrix.hpp"
#include "torsupp/rational.hpp"
#include "torsupp/torus.hpp"

namespace torsupp {

// Affine-linear form  coeffs . x + constant  with integer coefficient vector.
// Normal form: coefficients coprime, first nonzero coefficient positive, the
// constant rescaled along. Proportional forms normalize identically.
struct LinForm {
  std::vector<Int> coeffs;
  Rat constant;

  bool coeffs_zero() const {
    for (const Int& c : coeffs)
      if (c != 0) return false;
    return true;
  }

  Rat eval(const QVec& x) const {
    Rat v = constant;
    for (size_t j = 0; j < coeffs.size(); ++j) v += Rat(coeffs[j]) * x[j];
    return v;
  }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.coeffs == b.coeffs && a.constant == b.constant;
  }
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
  friend bool operator<(const LinForm& a, const LinForm& b) {
    int c = cmp_vec(a.coeffs, b.coeffs);
    if (c != 0) return c < 0;
    return a.constant < b.constant;
  }
};

inline LinForm normalize(LinForm f) {
  Int content(0);
  for (const Int& c : f.coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 0) return f;  // constant form, left untouched
  int lead = 0;
  while (f.coeffs[lead] == 0) ++lead;
  if (f.coeffs[lead] < 0) content = -content;
  for (Int& c : f.coeffs) c /= content;
  f.constant /= Rat(content);
  return f;
}

inline LinForm make_form(std::vector<Int> coeffs, Rat constant) {
  return normalize(LinForm{std::move(coeffs), std::move(constant)});
}

// Scale needed to clear the constant's denominator; the minimal integral
// representative of the form's proportionality class, used for display.
inline LinForm integral_form(const LinForm& f) {
  LinForm g = f;
  Int d = f.constant.get_den();
  if (d != 1) {
    for (Int& c : g.coeffs) c *= d;
    g.constant *= Rat(d);
  }
  return g;
}

inline AffineConstraint to_constraint(const LinForm& f) { return {f.coeffs, f.constant}; }

// ---------------------------------------------------------------------------

// Nonempty rational affine subspace of C^dim in canonical form: the defining
// forms are the RREF rows of any generating system, normalized. Equality of
// subspaces is structural equality.
struct AffineSubspace {
  int dim = 0;
  std::vector<LinForm> forms;  // independent, minimal, canonical

  int subspace_dim() const { return dim - int(forms.size()); }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.dim == b.dim && a.forms == b.forms;
  }
  friend bool operator!=(const AffineSubspace& a, const AffineSubspace& b) { return !(a == b); }
};

inline int cmp_subspace(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.forms.size() != b.forms.size()) return a.forms.size() < b.forms.size() ? -1 : 1;
  for (size_t i = 0; i < a.forms.size(); ++i) {
    if (a.forms[i] != b.forms[i]) return a.forms[i] < b.forms[i] ? -1 : 1;
  }
  return 0;
}

// Canonicalizes a defining system; absent result means the solution set is empty.
inline std::optional<AffineSubspace> make_subspace(int dim, const std::vector<LinForm>& forms) {
  QMat rows;
  for (const auto& f : forms) {
    if (int(f.coeffs.size()) != dim) throw std::invalid_argument("form length mismatch");
    QVec row(dim + 1);
    for (int j = 0; j < dim; ++j) row[j] = Rat(f.coeffs[j]);
    row[dim] = f.constant;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(rows);
  AffineSubspace s;
  s.dim = dim;
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == dim) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    // clear denominators of the RREF row, then normalize
    Int den(1);
    for (int j = 0; j <= dim; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), Rat(rows[i][j]).get_den().get_mpz_t());
    std::vector<Int> coeffs(dim);
    for (int j = 0; j < dim; ++j) coeffs[j] = Rat(rows[i][j] * Rat(den)).get_num();
    Rat c = rows[i][dim] * Rat(den);
    s.forms.push_back(make_form(std::move(coeffs), c));
  }
  return s;
}

inline AffineSubspace hyperplane_subspace(int dim, const LinForm& f) {
  auto s = make_subspace(dim, {f});
  if (!s) throw std::invalid_argument("degenerate hyperplane form");
  return *s;
}

// outer contains inner iff every defining form of outer vanishes on inner,
// i.e. lies in the affine span of inner's defining system.
inline bool subspace_contains(const AffineSubspace& outer, const AffineSubspace& inner) {
  if (outer.dim != inner.dim) throw std::invalid_argument("subspace dimension mismatch");
  QMat inner_rows;
  for (const auto& f : inner.forms) {
    QVec row(inner.dim + 1);
    for (int j = 0; j < inner.dim; ++j) row[j] = Rat(f.coeffs[j]);
    row[inner.dim] = f.constant;
    inner_rows.push_back(std::move(row));
  }
  for (const auto& f : outer.forms) {
    QVec v(outer.dim + 1);
    for (int j = 0; j < outer.dim; ++j) v[j] = Rat(f.coeffs[j]);
    v[outer.dim] = f.constant;
    if (!in_row_space(inner_rows, v)) return false;
  }
  return true;
}

inline std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  std::vector<LinForm> forms = a.forms;
  forms.insert(forms.end(), b.forms.begin(), b.forms.end());
  return make_subspace(a.dim, forms);
}

// Translation by -c: the zero locus of b(s + c).
inline AffineSubspace translate(const AffineSubspace& s, const std::vector<Int>& c) {
  std::vector<LinForm> forms = s.forms;
  for (auto& f : forms) {
    Rat shift(0);
    for (int j = 0; j < s.dim; ++j) shift += Rat(f.coeffs[j]) * Rat(c[j]);
    f.constant += shift;
  }
  return *make_subspace(s.dim, forms);
}

// Finite union of rational affine subspaces, irredundant and sorted.
struct AffineLocus {
  int dim = 0;
  std::vector<AffineSubspace> components;

  bool empty() const { return components.empty(); }

  friend bool operator==(const AffineLocus& a, const AffineLocus& b) {
    return a.dim == b.dim && a.components == b.components;
  }
  friend bool operator!=(const AffineLocus& a, const AffineLocus& b) { return !(a == b); }
};

inline AffineLocus make_locus(int dim, std::vector<AffineSubspace> comps) {
  std::vector<AffineSubspace> kept;
  for (auto& c : comps) {
    bool absorbed = false;
    for (auto& k : kept)
      if (subspace_contains(k, c)) {
        absorbed = true;
        break;
      }
    if (absorbed) continue;
    std::erase_if(kept, [&](const AffineSubspace& k) { return subspace_contains(c, k); });
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(),
            [](const AffineSubspace& a, const AffineSubspace& b) { return cmp_subspace(a, b) < 0; });
  AffineLocus l;
  l.dim = dim;
  l.components = std::move(kept);
  return l;
}

inline AffineLocus union_of(const AffineLocus& a, const AffineLocus& b) {
  if (a.dim != b.dim) throw std::invalid_argument("locus union: dimension mismatch");
  auto comps = a.components;
  comps.insert(comps.end(), b.components.begin(), b.components.end());
  return make_locus(a.dim, std::move(comps));
}

inline AffineLocus intersect(const AffineLocus& a, const AffineLocus& b) {
  if (a.dim != b.dim) throw std::invalid_argument("locus intersection: dimension mismatch");
  std::vector<AffineSubspace> comps;
  for (const auto& ca : a.components)
    for (const auto& cb : b.components) {
      auto piece = intersect(ca, cb);
      if (piece) comps.push_back(std::move(*piece));
    }
  return make_locus(a.dim, std::move(comps));
}

inline AffineLocus translate(const AffineLocus& l, const std::vector<Int>& c) {
  std::vector<AffineSubspace> comps;
  for (const auto& s : l.components) comps.push_back(translate(s, c));
  return make_locus(l.dim, std::move(comps));
}

inline bool locus_includes(const AffineLocus& a, const AffineLocus& b) {
  for (const auto& cb : b.components) {
    bool inside = false;
    for (const auto& ca : a.components)
      if (subspace_contains(ca, cb)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

// Zariski closure of Exp of one subspace / a whole locus.
inline TorsionCoset exp_affine(const AffineSubspace& s) {
  std::vector<AffineConstraint> cons;
  for (const auto& f : s.forms) cons.push_back(to_constraint(f));
  return exp_affine(s.dim, cons);
}

inline CosetUnion exp_locus(const AffineLocus& l) {
  std::vector<TorsionCoset> comps;
  for (const auto& s : l.components) comps.push_back(exp_affine(s));
  return make_union(l.dim, std::move(comps));
}

}  // namespace torsupp
