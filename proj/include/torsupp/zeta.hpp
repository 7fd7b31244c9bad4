#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "torsupp/affine.hpp"
#include "torsupp/arrangement.hpp"
#include "torsupp/bs_ideal.hpp"
#include "torsupp/spoly.hpp"
#include "torsupp/support.hpp"

namespace torsupp {

// Exact rational function with denominator a product of affine-linear forms,
// kept fully reduced: no denominator form divides the numerator. Forms are
// normalized, so the representation is canonical and equality is structural.
struct SRationalFunction {
  int nvars = 0;
  SPoly num;
  std::vector<std::pair<LinForm, int>> den;  // sorted by form, positive multiplicities

  bool is_zero() const { return num.is_zero(); }

  friend bool operator==(const SRationalFunction& a, const SRationalFunction& b) {
    return a.nvars == b.nvars && a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const SRationalFunction& a, const SRationalFunction& b) {
    return !(a == b);
  }
};

namespace detail {

inline void sort_den(std::vector<std::pair<LinForm, int>>& den) {
  std::sort(den.begin(), den.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

inline void reduce(SRationalFunction& z) {
  if (z.num.is_zero()) {
    z.den.clear();
    return;
  }
  for (auto& [form, mult] : z.den) {
    while (mult > 0) {
      auto q = divide_by_form(z.num, form);
      if (!q) break;
      z.num = std::move(*q);
      --mult;
    }
  }
  std::erase_if(z.den, [](const auto& d) { return d.second == 0; });
  sort_den(z.den);
}

}  // namespace detail

inline SRationalFunction srf_zero(int nvars) { return {nvars, SPoly::zero(nvars), {}}; }

// num / prod(raw forms^mult): normalizes each denominator form and folds the
// scale factors into the numerator, then reduces.
inline SRationalFunction srf_quotient(int nvars, SPoly num,
                                      const std::vector<std::pair<LinForm, int>>& raw_den) {
  SRationalFunction z;
  z.nvars = nvars;
  Rat scale(1);
  std::map<LinForm, int> den;
  for (const auto& [rf, mult] : raw_den) {
    if (mult < 1) throw std::invalid_argument("nonpositive denominator multiplicity");
    if (rf.coeffs_zero()) {
      if (rf.constant == 0) throw std::invalid_argument("zero denominator form");
      for (int k = 0; k < mult; ++k) scale /= rf.constant;
      continue;
    }
    LinForm nf = normalize(rf);
    // rf = g * nf with g the (signed) content of rf's coefficients
    int lead = 0;
    while (nf.coeffs[lead] == 0) ++lead;
    Rat g = Rat(rf.coeffs[lead]) / Rat(nf.coeffs[lead]);
    for (int k = 0; k < mult; ++k) scale /= g;
    den[nf] += mult;
  }
  z.num = scale * num;
  for (auto& [f, m] : den) z.den.emplace_back(f, m);
  detail::reduce(z);
  return z;
}

// chi / prod(raw forms)
inline SRationalFunction srf_term(int nvars, const Rat& chi, const std::vector<LinForm>& raw) {
  std::vector<std::pair<LinForm, int>> den;
  for (const LinForm& f : raw) den.emplace_back(f, 1);
  return srf_quotient(nvars, SPoly::constant(nvars, chi), den);
}

inline SRationalFunction operator+(const SRationalFunction& a, const SRationalFunction& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("rational function arity mismatch");
  // least common denominator: per-form maximum of the multiplicities
  std::map<LinForm, int> lcd;
  for (const auto& [f, m] : a.den) lcd[f] = std::max(lcd[f], m);
  for (const auto& [f, m] : b.den) lcd[f] = std::max(lcd[f], m);
  auto complement = [&](const SRationalFunction& z) {
    SPoly p = z.num;
    for (const auto& [f, m] : lcd) {
      int have = 0;
      for (const auto& [zf, zm] : z.den)
        if (zf == f) have = zm;
      for (int k = have; k < m; ++k) p = p * spoly_from_form(z.nvars, f);
    }
    return p;
  };
  SRationalFunction out;
  out.nvars = a.nvars;
  out.num = complement(a) + complement(b);
  for (const auto& [f, m] : lcd) out.den.emplace_back(f, m);
  detail::reduce(out);
  return out;
}

inline SRationalFunction operator*(const Rat& c, const SRationalFunction& z) {
  SRationalFunction out = z;
  out.num = c * out.num;
  if (out.num.is_zero()) out.den.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Resolution data and the zeta function.

// Numerical data of a log resolution: per divisor the multiplicity vector
// a_{i,j} = ord_{E_i}(f_j) and the discrepancy k_i; per stratum I the Euler
// characteristic of the open stratum E_I (deg 0 meaning E_I minus the other
// divisors), and optionally its Euler characteristic over the basepoint.
struct ResolutionData {
  int r = 0;
  struct Divisor {
    std::vector<Int> a;
    Int k;
  };
  struct Stratum {
    std::vector<int> divisor_ids;  // sorted
    Int chi;
    std::optional<Int> chi0;
  };
  std::vector<Divisor> divisors;
  std::vector<Stratum> strata;
};

inline void validate(const ResolutionData& d) {
  if (d.r < 1) throw std::invalid_argument("resolution: r must be positive");
  for (const auto& div : d.divisors) {
    if (int(div.a.size()) != d.r) throw std::invalid_argument("resolution: divisor arity");
    for (const Int& x : div.a)
      if (x < 0) throw std::invalid_argument("resolution: negative order");
    if (div.k < 0) throw std::invalid_argument("resolution: negative discrepancy");
  }
  std::set<std::vector<int>> seen;
  for (const auto& s : d.strata) {
    std::vector<int> ids = s.divisor_ids;
    if (!std::is_sorted(ids.begin(), ids.end()))
      throw std::invalid_argument("resolution: stratum ids not sorted");
    for (int i : ids)
      if (i < 0 || i >= int(d.divisors.size()))
        throw std::invalid_argument("resolution: stratum id out of range");
    if (!seen.insert(ids).second) throw std::invalid_argument("resolution: repeated stratum");
  }
}

// Z(s) = sum over strata of chi(E_I) prod_{i in I} 1/(a_i . s + k_i + 1),
// over the common denominator and fully reduced. With local set, the
// chi-over-basepoint values replace chi.
inline SRationalFunction zeta_from_resolution(const ResolutionData& d, bool local) {
  validate(d);
  SRationalFunction z = srf_zero(d.r);
  for (const auto& s : d.strata) {
    Int chi = s.chi;
    if (local) {
      if (!s.chi0) throw std::invalid_argument("local zeta needs chi over the basepoint");
      chi = *s.chi0;
    }
    if (chi == 0) continue;
    std::vector<LinForm> forms;
    for (int i : s.divisor_ids) {
      LinForm f;
      f.coeffs = d.divisors[i].a;
      f.constant = Rat(d.divisors[i].k + 1);
      forms.push_back(f);
    }
    z = z + srf_term(d.r, Rat(chi), forms);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Canonical log resolution for line arrangements in the plane: blow up every
// point lying on at least three lines (those are exactly the dense point
// edges); double points are already normal crossings.
inline ResolutionData canonical_resolution_2d(const MultiArrangement& a) {
  if (a.n != 2) throw std::invalid_argument("canonical resolution implemented for n = 2 only");
  ResolutionData d;
  d.r = a.r;
  int nlines = int(a.hyperplanes.size());

  std::vector<Edge> points;
  for (const auto& e : intersection_lattice(a))
    if (e.codim == 2) points.push_back(e);

  QVec origin(2, Rat(0));
  auto is_origin = [&](const Edge& p) { return p.point == origin; };
  std::vector<int> lines_at_origin;
  for (int h = 0; h < nlines; ++h)
    if (a.hyperplanes[h].form.eval(origin) == 0) lines_at_origin.push_back(h);

  // divisors: strict transforms of the lines, then one exceptional divisor
  // per blown-up point
  for (int h = 0; h < nlines; ++h) d.divisors.push_back({a.hyperplanes[h].mults, Int(0)});
  std::map<std::vector<int>, int> blown;  // point through-set -> divisor id
  for (const auto& p : points) {
    if (int(p.through.size()) < 3) continue;
    std::vector<Int> sum(a.r, Int(0));
    for (int h : p.through)
      for (int j = 0; j < a.r; ++j) sum[j] += a.hyperplanes[h].mults[j];
    blown[p.through] = int(d.divisors.size());
    d.divisors.push_back({std::move(sum), Int(1)});
  }

  auto origin_status = [&]() -> int {
    // 3 = blown point, 2 = double point, 1 = one line, 0 = off the divisor
    for (const auto& p : points)
      if (is_origin(p)) return int(p.through.size()) >= 3 ? 3 : 2;
    return lines_at_origin.size() == 1 ? 1 : 0;
  }();

  // empty stratum: chi of the complement of the arrangement in C^2
  {
    Int chi = 1 - nlines;
    for (const auto& p : points) chi += Int(int(p.through.size()) - 1);
    d.strata.push_back({{}, chi, Int(origin_status == 0 ? 1 : 0)});
  }
  // open line strata
  for (int h = 0; h < nlines; ++h) {
    Int pts(0);
    bool origin_interior = origin_status == 1 && a.hyperplanes[h].form.eval(origin) == 0;
    for (const auto& p : points)
      if (std::binary_search(p.through.begin(), p.through.end(), h)) ++pts;
    d.strata.push_back({{h}, Int(1) - pts, Int(origin_interior ? 1 : 0)});
  }
  // exceptional divisor strata and incidences
  for (const auto& p : points) {
    bool at_origin = is_origin(p);
    if (int(p.through.size()) >= 3) {
      int id = blown.at(p.through);
      Int chi = Int(2) - Int(int(p.through.size()));
      d.strata.push_back({{id}, chi, at_origin ? chi : Int(0)});
      for (int h : p.through)
        d.strata.push_back({{h, id}, Int(1), Int(at_origin ? 1 : 0)});
    } else {
      // surviving double point
      std::vector<int> ids = p.through;
      d.strata.push_back({ids, Int(1), Int(at_origin ? 1 : 0)});
    }
  }
  for (auto& s : d.strata) std::sort(s.divisor_ids.begin(), s.divisor_ids.end());
  validate(d);
  return d;
}

// Sum of all stratum Euler characteristics: must equal chi of the resolved
// surface, 1 + number of blowups.
inline Int stratum_chi_sum(const ResolutionData& d) {
  Int s(0);
  for (const auto& st : d.strata) s += st.chi;
  return s;
}

// ---------------------------------------------------------------------------
// Polar loci.

using PolarLocus = std::vector<LinForm>;  // deduplicated, sorted

inline PolarLocus polar_locus(const SRationalFunction& z) {
  PolarLocus out;
  for (const auto& [f, m] : z.den) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Candidate polar forms from the dense edges: a_W . s + codim(W) with
// a_{W,j} the order of vanishing of f_j along W.
inline PolarLocus polar_candidates(const MultiArrangement& a) {
  PolarLocus out;
  for (const auto& e : intersection_lattice(a)) {
    if (!is_dense(a, e)) continue;
    std::vector<Int> aw(a.r, Int(0));
    for (int h : e.through)
      for (int j = 0; j < a.r; ++j) aw[j] += a.hyperplanes[h].mults[j];
    out.push_back(make_form(std::move(aw), Rat(e.codim)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Substitution.

inline SRationalFunction substitute_affine(const SRationalFunction& z,
                                           const AffineAssignment& map) {
  if (int(map.lin.size()) != z.nvars) throw std::invalid_argument("substitution arity mismatch");
  SRationalFunction out;
  out.nvars = map.target_dim;
  Rat scale(1);
  std::map<LinForm, int> den;
  for (const auto& [f, mult] : z.den) {
    std::vector<Int> coeffs(map.target_dim, Int(0));
    Rat cst = f.constant;
    for (int j = 0; j < z.nvars; ++j) {
      for (int k = 0; k < map.target_dim; ++k) coeffs[k] += f.coeffs[j] * map.lin[j][k];
      cst += Rat(f.coeffs[j]) * map.cst[j];
    }
    bool zero = true;
    for (const Int& c : coeffs) zero = zero && c == 0;
    if (zero) {
      if (cst == 0) throw std::invalid_argument("substitution maps a denominator form to zero");
      for (int k = 0; k < mult; ++k) scale /= cst;
      continue;
    }
    LinForm img{coeffs, cst};
    LinForm nf = normalize(img);
    int lead = 0;
    while (nf.coeffs[lead] == 0) ++lead;
    Rat g = Rat(img.coeffs[lead]) / Rat(nf.coeffs[lead]);
    for (int k = 0; k < mult; ++k) scale /= g;
    den[nf] += mult;
  }
  out.num = scale * substitute(z.num, map);
  for (auto& [f, m] : den) out.den.emplace_back(f, m);
  detail::reduce(out);
  return out;
}

// ---------------------------------------------------------------------------
// Monodromy conjecture checkers.

struct FormCheckResult {
  bool holds = true;
  std::optional<LinForm> witness;
};

// Exp of every polar hyperplane must land inside the given support union.
inline FormCheckResult check_forms_against_support(const CosetUnion& support, int r,
                                                   const std::vector<LinForm>& forms) {
  FormCheckResult res;
  for (const LinForm& f : forms) {
    TorsionCoset c = exp_affine(hyperplane_subspace(r, f));
    if (!includes(support, make_union(r, {c}))) {
      res.holds = false;
      res.witness = f;
      return res;
    }
  }
  return res;
}

inline FormCheckResult check_monodromy_forms(const MultiArrangement& a,
                                             const std::vector<LinForm>& forms) {
  return check_forms_against_support(uniform_support_union(a).total, a.r, forms);
}

// Built-in path for line arrangements: poles of the canonical-resolution zeta.
inline FormCheckResult check_monodromy(const MultiArrangement& a) {
  return check_monodromy_forms(a, polar_locus(zeta_from_resolution(canonical_resolution_2d(a), false)));
}

inline FormCheckResult check_monodromy(const MultiArrangement& a, const ResolutionData& res) {
  return check_monodromy_forms(a, polar_locus(zeta_from_resolution(res, false)));
}

inline FormCheckResult check_monodromy_candidates(const MultiArrangement& a) {
  return check_monodromy_forms(a, polar_candidates(a));
}

// Strong version: every polar hyperplane must be a component of (or sit
// inside a component of) the Bernstein-Sato zero locus.
inline FormCheckResult check_strong_monodromy(const PolarLocus& p, const AffineLocus& bs) {
  FormCheckResult res;
  for (const LinForm& f : p) {
    AffineSubspace h = hyperplane_subspace(bs.dim, f);
    bool inside = false;
    for (const auto& comp : bs.components)
      if (subspace_contains(comp, h)) {
        inside = true;
        break;
      }
    if (!inside) {
      res.holds = false;
      res.witness = f;
      return res;
    }
  }
  return res;
}

// Reduction of the strong conjecture to the dense-edge hyperplane prediction:
// for every dense edge the candidate form must agree with the predicted
// hyperplane of the restricted arrangement, and lie in the given locus.
struct ThmsmResult {
  bool holds = true;
  std::optional<LinForm> witness;
  int dense_edges_checked = 0;
};

inline ThmsmResult check_thmsm_reduction(const MultiArrangement& a, const AffineLocus& bs) {
  if (!is_central(a)) throw std::invalid_argument("thmsm reduction needs a central arrangement");
  ThmsmResult res;
  for (const auto& e : intersection_lattice(a)) {
    if (!is_dense(a, e)) continue;
    ++res.dense_edges_checked;
    std::vector<Int> aw(a.r, Int(0));
    for (int h : e.through)
      for (int j = 0; j < a.r; ++j) aw[j] += a.hyperplanes[h].mults[j];
    LinForm candidate = make_form(aw, Rat(e.codim));
    // degree bookkeeping identity against the restriction
    MultiArrangement rest = restriction_to_edge(a, e);
    AffineSubspace predicted = conjnd_hyperplane(rest);
    if (predicted != hyperplane_subspace(a.r, candidate)) {
      res.holds = false;
      res.witness = candidate;
      return res;
    }
    auto check = check_strong_monodromy({candidate}, bs);
    if (!check.holds) {
      res.holds = false;
      res.witness = candidate;
      return res;
    }
  }
  return res;
}

inline ThmsmResult check_thmsm_reduction(const MultiArrangement& a, const BSIdealDatum& b) {
  return check_thmsm_reduction(a, locus(b));
}

}  // namespace torsupp
