#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torsupp/arrangement.hpp"
#include "torsupp/torus.hpp"

namespace torsupp {

// Contribution of one edge W to the uniform support: the solution set of
// { t^{d^{(i)}} = 1 : blocks i of the total splitting of F_W }, where
// d^{(i)}_j sums the multiplicities of f_j over the block. Constraints are
// generated only from hyperplanes through the edge, so the equations t_j = 1
// for non-vanishing entries never appear.
inline CosetUnion edge_contribution(const MultiArrangement& a, const Edge& w) {
  Splitting s = total_splitting(a, w);
  std::vector<CharConstraint> cons;
  for (const auto& d : s.degree_vectors) cons.push_back({d, QZ()});
  return solve_character_constraints(a.r, cons);
}

struct SupportReport {
  std::vector<std::pair<Edge, CosetUnion>> per_edge;
  CosetUnion total;   // union of the per-edge contributions
  CosetUnion codim1;  // components of total cut by a rank-1 character lattice
};

// The union over all edges of the uniform supports of the specialization
// complex: the combinatorial formula for hyperplane multi-arrangements.
inline SupportReport uniform_support_union(const MultiArrangement& a) {
  SupportReport rep;
  rep.total.ambient_dim = a.r;
  rep.codim1.ambient_dim = a.r;
  std::vector<TorsionCoset> all;
  for (const Edge& w : intersection_lattice(a)) {
    CosetUnion u = edge_contribution(a, w);
    for (const auto& c : u.components) all.push_back(c);
    rep.per_edge.emplace_back(w, std::move(u));
  }
  rep.total = make_union(a.r, std::move(all));
  std::vector<TorsionCoset> big;
  for (const auto& c : rep.total.components)
    if (c.lattice.rank() == 1) big.push_back(c);
  rep.codim1 = make_union(a.r, std::move(big));
  return rep;
}

// Supp^unif at a point: the contribution of the smallest edge through x.
inline CosetUnion support_at_point(const MultiArrangement& a, const QVec& x) {
  return edge_contribution(a, edge_at_point(a, x));
}

// Diagonal restriction of the support union: the set of all eigenvalues of
// the Milnor monodromy along the divisor.
inline EigenvalueSet milnor_eigenvalues(const MultiArrangement& a) {
  return restrict_to_diagonal(uniform_support_union(a).total);
}

struct CheckResult {
  bool holds = true;
  std::optional<TorsionCoset> witness;  // a component present on one side only
};

// Supports commute with non-degenerate specialization: the preimage of the
// support of F under the monomial map of M equals the support of F^M.
inline CheckResult check_specialization(const MultiArrangement& a, const IntMatrix& m) {
  RegroupResult g = regroup(a, m);
  if (g.degenerate) throw std::invalid_argument("degenerate specialization matrix");
  CosetUnion lhs = preimage_monomial(m, uniform_support_union(a).total);
  CosetUnion rhs = uniform_support_union(g.arrangement).total;
  CheckResult res;
  if (lhs == rhs) return res;
  res.holds = false;
  auto w = first_uncovered(lhs, rhs);
  if (!w) w = first_uncovered(rhs, lhs);
  res.witness = w;
  return res;
}

// Multiplicative Thom-Sebastiani: for central factors in disjoint variables,
// the support of the coordinatewise product at the origin is the intersection
// of the two supports at the respective origins.
inline CheckResult check_thom_sebastiani(const MultiArrangement& a1, const MultiArrangement& a2) {
  if (a1.r != a2.r) throw std::invalid_argument("thom-sebastiani: tuple lengths differ");
  if (!is_central(a1) || !is_central(a2))
    throw std::invalid_argument("thom-sebastiani check needs central arrangements");
  MultiArrangement merged = product(a1, a2);
  QVec origin_merged(merged.n, Rat(0));
  CosetUnion lhs = support_at_point(merged, origin_merged);
  CosetUnion rhs = intersect(support_at_point(a1, QVec(a1.n, Rat(0))),
                             support_at_point(a2, QVec(a2.n, Rat(0))));
  CheckResult res;
  if (lhs == rhs) return res;
  res.holds = false;
  auto w = first_uncovered(lhs, rhs);
  if (!w) w = first_uncovered(rhs, lhs);
  res.witness = w;
  return res;
}

// Homogeneous reduction: the support of a central arrangement is the origin
// contribution together with the supports of the affine chart restrictions.
inline CheckResult check_deconing(const MultiArrangement& a) {
  if (!is_central(a)) throw std::invalid_argument("deconing check needs a central arrangement");
  CosetUnion total = uniform_support_union(a).total;
  CosetUnion rhs = support_at_point(a, QVec(a.n, Rat(0)));
  for (int i = 0; i < a.n; ++i) {
    MultiArrangement chart = chart_restriction(a, i);
    if (chart.hyperplanes.empty()) continue;
    rhs = union_of(rhs, uniform_support_union(chart).total);
  }
  CheckResult res;
  if (total == rhs) return res;
  res.holds = false;
  auto w = first_uncovered(total, rhs);
  if (!w) w = first_uncovered(rhs, total);
  res.witness = w;
  return res;
}

}  // namespace torsupp
