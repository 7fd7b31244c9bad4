#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torsupp/affine.hpp"
#include "torsupp/arrangement.hpp"
#include "torsupp/support.hpp"

namespace torsupp {

// One factor of a factored generator: a linear polynomial raised to a power.
struct BSFactor {
  LinForm form;
  int power = 1;
};

// Imported Bernstein-Sato-type ideal data. Two shapes occur in practice:
// factored generators (several generators cut the intersection of their
// loci) and explicit intersections of linear-form ideals. Powers only matter
// for display; zero loci ignore them.
struct BSIdealDatum {
  int r = 0;
  std::vector<std::vector<BSFactor>> generators;
  std::vector<std::vector<BSFactor>> intersect_of;
  std::string locality;  // informational tag: "", "global", "local0", ...
};

inline void validate(const BSIdealDatum& b) {
  if (b.r < 1) throw std::invalid_argument("bs datum: r must be positive");
  auto check_factor = [&](const BSFactor& f) {
    if (int(f.form.coeffs.size()) != b.r) throw std::invalid_argument("bs factor length mismatch");
    if (f.power < 1) throw std::invalid_argument("bs factor power must be positive");
    if (f.form.coeffs_zero()) throw std::invalid_argument("bs factor has no linear part");
  };
  for (const auto& g : b.generators)
    for (const auto& f : g) check_factor(f);
  for (const auto& e : b.intersect_of)
    for (const auto& f : e) check_factor(f);
  if (b.generators.empty() && b.intersect_of.empty())
    throw std::invalid_argument("bs datum has no generators");
}

// Zero locus: intersection over generators of the union of their factor
// hyperplanes, intersected with the union over intersect_of entries of the
// subspace each entry cuts out.
inline AffineLocus locus(const BSIdealDatum& b) {
  validate(b);
  std::optional<AffineLocus> acc;
  for (const auto& g : b.generators) {
    std::vector<AffineSubspace> comps;
    for (const auto& f : g) comps.push_back(hyperplane_subspace(b.r, f.form));
    AffineLocus l = make_locus(b.r, std::move(comps));
    acc = acc ? intersect(*acc, l) : l;
  }
  if (!b.intersect_of.empty()) {
    std::vector<AffineSubspace> comps;
    for (const auto& e : b.intersect_of) {
      std::vector<LinForm> forms;
      for (const auto& f : e) forms.push_back(f.form);
      auto s = make_subspace(b.r, forms);
      if (s) comps.push_back(std::move(*s));
    }
    AffineLocus l = make_locus(b.r, std::move(comps));
    acc = acc ? intersect(*acc, l) : l;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Monomial closed form.

struct MonomialBS {
  std::vector<BSFactor> generator;  // one factored generator
  AffineLocus locus;
};

// For tuples of monomials f_j = prod_i x_i^{a_ij}: the ideal is principal with
// generator prod_i prod_{k=1..a_i} (l_i(s) + k), l_i(s) = sum_j a_ij s_j and
// a_i the total exponent of x_i.
inline MonomialBS monomial_bs_locus(const MultiArrangement& a) {
  MonomialBS out;
  std::vector<AffineSubspace> comps;
  for (const auto& h : a.hyperplanes) {
    int nonzero = 0, var = -1;
    for (int j = 0; j < a.n; ++j)
      if (h.form.coeffs[j] != 0) {
        ++nonzero;
        var = j;
      }
    if (nonzero != 1 || h.form.coeffs[var] != 1 || h.form.constant != 0)
      throw std::invalid_argument("monomial closed form needs coordinate hyperplanes");
    Int total(0);
    for (const Int& m : h.mults) total += m;
    for (Int k(1); k <= total; ++k) {
      LinForm f = make_form(h.mults, Rat(k));
      out.generator.push_back({f, 1});
      comps.push_back(hyperplane_subspace(a.r, f));
    }
  }
  // merge repeated hyperplanes into powers
  std::vector<BSFactor> merged;
  for (auto& f : out.generator) {
    bool found = false;
    for (auto& g : merged)
      if (g.form == f.form) {
        ++g.power;
        found = true;
      }
    if (!found) merged.push_back(f);
  }
  std::sort(merged.begin(), merged.end(),
            [](const BSFactor& x, const BSFactor& y) { return x.form < y.form; });
  out.generator = std::move(merged);
  out.locus = make_locus(a.r, std::move(comps));
  return out;
}

// ---------------------------------------------------------------------------
// Shift decomposition.

// V(B^m) from the unit loci V(B^{e_j}) along a permutation pi:
// union over j with m_{pi(j)} > 0 and 0 <= k < m_{pi(j)} of the unit locus of
// pi(j) translated by the accumulated shift m_{pi(1)} e_{pi(1)} + ... + k e_{pi(j)}.
inline AffineLocus vb_decomposition(const std::vector<AffineLocus>& unit_loci,
                                    const std::vector<Int>& m, const std::vector<int>& pi) {
  int r = int(unit_loci.size());
  if (int(m.size()) != r || int(pi.size()) != r)
    throw std::invalid_argument("vb_decomposition: length mismatch");
  int dim = r == 0 ? 0 : unit_loci[0].dim;
  std::vector<AffineSubspace> comps;
  std::vector<Int> base(dim, Int(0));
  for (int jpos = 0; jpos < r; ++jpos) {
    int j = pi[jpos];
    if (m[j] > 0) {
      for (Int k(0); k < m[j]; ++k) {
        std::vector<Int> shift = base;
        shift[j] += k;
        AffineLocus t = translate(unit_loci[j], shift);
        for (auto& c : t.components) comps.push_back(std::move(c));
      }
    }
    base[j] += m[j];
  }
  return make_locus(dim, std::move(comps));
}

// Exp of V(B^m): only which entries of m vanish matters.
inline CosetUnion exp_vb(const std::vector<AffineLocus>& unit_loci, const std::vector<Int>& m) {
  int r = int(unit_loci.size());
  if (int(m.size()) != r) throw std::invalid_argument("exp_vb: length mismatch");
  int dim = r == 0 ? 0 : unit_loci[0].dim;
  CosetUnion out;
  out.ambient_dim = dim;
  for (int j = 0; j < r; ++j) {
    if (m[j] == 0) continue;
    out = union_of(out, exp_locus(unit_loci[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture checkers.

// The predicted hyperplane d_1 s_1 + ... + d_r s_r + n = 0 for a central
// essential indecomposable arrangement.
inline AffineSubspace conjnd_hyperplane(const MultiArrangement& a) {
  if (!is_central(a)) throw std::invalid_argument("conjnd: arrangement not central");
  auto edges = intersection_lattice(a);
  if (edges.empty() || edges.back().codim != a.n)
    throw std::invalid_argument("conjnd: arrangement not essential");
  const Edge& origin = edges.back();
  if (!is_dense(a, origin)) throw std::invalid_argument("conjnd: arrangement decomposable");
  std::vector<Int> d = degrees(a);
  return hyperplane_subspace(a.r, make_form(d, Rat(a.n)));
}

enum class Conj2Verdict { equal, strictly_contains, strictly_contained, incomparable };

struct Conj2Result {
  Conj2Verdict verdict;
  // components witnessing each strict direction
  std::optional<TorsionCoset> extra_in_exp;      // in Exp(V(B)) but not the support
  std::optional<TorsionCoset> extra_in_support;  // in the support but not Exp(V(B))
};

// Compares Exp(V(B_F)) with the support union. Containment of the support in
// Exp(V(B_F)) is a theorem; a strictly_contained verdict therefore flags
// defective input data rather than a counterexample.
inline Conj2Result compare_conj2(const CosetUnion& exp_side, const CosetUnion& support_side) {
  bool exp_has_all = includes(exp_side, support_side);
  bool supp_has_all = includes(support_side, exp_side);
  Conj2Result res{Conj2Verdict::incomparable, std::nullopt, std::nullopt};
  if (exp_has_all && supp_has_all) {
    res.verdict = Conj2Verdict::equal;
    return res;
  }
  if (exp_has_all) {
    res.verdict = Conj2Verdict::strictly_contains;
    res.extra_in_exp = first_uncovered(support_side, exp_side);
    return res;
  }
  if (supp_has_all) {
    res.verdict = Conj2Verdict::strictly_contained;
    res.extra_in_support = first_uncovered(exp_side, support_side);
    return res;
  }
  res.extra_in_exp = first_uncovered(support_side, exp_side);
  res.extra_in_support = first_uncovered(exp_side, support_side);
  return res;
}

inline Conj2Result check_conj2(const MultiArrangement& a, const BSIdealDatum& b) {
  if (b.r != a.r) throw std::invalid_argument("check_conj2: tuple length mismatch");
  return compare_conj2(exp_locus(locus(b)), uniform_support_union(a).total);
}

struct BsSpecializationResult {
  bool holds = true;                    // preimage of Exp V(B_F) contains Exp V(B_G)
  bool equal = false;                   // the two sides coincide
  std::optional<TorsionCoset> witness;  // component violating the inclusion
};

// Exp zero loci shrink along specialization: phi_M^{-1}(Exp V(B_F)) must
// contain Exp V(B_{F^M}).
inline BsSpecializationResult check_bs_specialization(const BSIdealDatum& bf,
                                                      const BSIdealDatum& bg,
                                                      const IntMatrix& m) {
  if (m.cols != bf.r || m.rows != bg.r)
    throw std::invalid_argument("check_bs_specialization: shape mismatch");
  CosetUnion lhs = preimage_monomial(m, exp_locus(locus(bf)));
  CosetUnion rhs = exp_locus(locus(bg));
  BsSpecializationResult res;
  res.holds = includes(lhs, rhs);
  res.equal = res.holds && includes(rhs, lhs);
  if (!res.holds) res.witness = first_uncovered(lhs, rhs);
  return res;
}

struct Conj1Result {
  bool holds = true;
  std::vector<LinForm> offending;  // factors with mixed signs or nonpositive constant
};

// Shape predicate: every factor has nonnegative coefficients and a strictly
// positive constant after sign normalization (all-nonpositive factors negated).
inline Conj1Result check_conj1_shape(const BSIdealDatum& b) {
  Conj1Result res;
  auto check_factor = [&](const BSFactor& f) {
    LinForm g = f.form;
    bool all_nonpos = g.constant <= 0;
    for (const Int& c : g.coeffs) all_nonpos = all_nonpos && c <= 0;
    if (all_nonpos) {
      for (Int& c : g.coeffs) c = -c;
      g.constant = -g.constant;
    }
    bool ok = g.constant > 0;
    for (const Int& c : g.coeffs) ok = ok && c >= 0;
    if (!ok) {
      res.holds = false;
      res.offending.push_back(f.form);
    }
  };
  for (const auto& g : b.generators)
    for (const auto& f : g) check_factor(f);
  for (const auto& e : b.intersect_of)
    for (const auto& f : e) check_factor(f);
  return res;
}

}  // namespace torsupp
