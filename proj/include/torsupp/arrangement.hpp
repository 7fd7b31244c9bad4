#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "torsupp/affine.hpp"
#include "torsupp/matrix.hpp"
#include "torsupp/rational.hpp"

namespace torsupp {

// One hyperplane of a multi-arrangement together with its multiplicity in each
// tuple entry f_1, ..., f_r.
struct HyperplaneMulti {
  LinForm form;
  std::vector<Int> mults;  // length r, nonnegative, not all zero
};

// A tuple F = (f_1, ..., f_r) of products of affine-linear forms over Q:
// f_j = prod_H form_H^{mults_j(H)}, hyperplanes pairwise distinct.
struct MultiArrangement {
  int n = 0;  // ambient dimension
  int r = 0;  // tuple length
  std::vector<HyperplaneMulti> hyperplanes;
};

inline void validate(const MultiArrangement& a) {
  if (a.n < 0 || a.r < 1) throw std::invalid_argument("arrangement: bad dimensions");
  for (const auto& h : a.hyperplanes) {
    if (int(h.form.coeffs.size()) != a.n) throw std::invalid_argument("arrangement: form length");
    if (h.form.coeffs_zero()) throw std::invalid_argument("arrangement: zero form");
    if (normalize(h.form) != h.form) throw std::invalid_argument("arrangement: form not normalized");
    if (int(h.mults.size()) != a.r) throw std::invalid_argument("arrangement: mults length");
    bool some = false;
    for (const Int& m : h.mults) {
      if (m < 0) throw std::invalid_argument("arrangement: negative multiplicity");
      if (m > 0) some = true;
    }
    if (!some) throw std::invalid_argument("arrangement: hyperplane with zero multiplicities");
  }
  for (size_t i = 0; i < a.hyperplanes.size(); ++i)
    for (size_t j = i + 1; j < a.hyperplanes.size(); ++j)
      if (a.hyperplanes[i].form == a.hyperplanes[j].form)
        throw std::invalid_argument("arrangement: repeated hyperplane");
}

inline MultiArrangement make_arrangement(int n, int r, std::vector<HyperplaneMulti> hs) {
  MultiArrangement a{n, r, std::move(hs)};
  for (auto& h : a.hyperplanes) h.form = normalize(h.form);
  validate(a);
  return a;
}

inline bool is_central(const MultiArrangement& a) {
  for (const auto& h : a.hyperplanes)
    if (h.form.constant != 0) return false;
  return true;
}

// deg f_j = sum of multiplicities over the hyperplanes
inline std::vector<Int> degrees(const MultiArrangement& a) {
  std::vector<Int> d(a.r, Int(0));
  for (const auto& h : a.hyperplanes)
    for (int j = 0; j < a.r; ++j) d[j] += h.mults[j];
  return d;
}

inline bool tuple_entry_nonconstant(const MultiArrangement& a, int j) {
  for (const auto& h : a.hyperplanes)
    if (h.mults[j] > 0) return true;
  return false;
}

// A nonempty intersection of hyperplanes, carrying its full (closed) through-set.
struct Edge {
  QVec point;                 // one rational point on the edge
  std::vector<QVec> direction;  // basis of the direction space
  std::vector<int> through;   // sorted indices of all hyperplanes containing the edge
  int codim = 0;

  friend bool operator==(const Edge& a, const Edge& b) { return a.through == b.through; }
};

namespace detail {

struct SubspaceGeom {
  QVec point;
  std::vector<QVec> direction;
};

inline std::optional<SubspaceGeom> solve_forms(const MultiArrangement& a,
                                               const std::vector<int>& idx) {
  QMat sys(idx.size(), QVec(a.n));
  QVec rhs(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    const LinForm& f = a.hyperplanes[idx[i]].form;
    for (int j = 0; j < a.n; ++j) sys[i][j] = Rat(f.coeffs[j]);
    rhs[i] = -f.constant;
  }
  auto sol = solve_affine_rational(sys, rhs, a.n);
  if (!sol) return std::nullopt;
  return SubspaceGeom{sol->point, sol->kernel};
}

inline bool form_vanishes_on(const LinForm& f, const SubspaceGeom& g) {
  if (f.eval(g.point) != 0) return false;
  for (const auto& d : g.direction) {
    Rat dot(0);
    for (size_t j = 0; j < d.size(); ++j) dot += Rat(f.coeffs[j]) * d[j];
    if (dot != 0) return false;
  }
  return true;
}

inline std::vector<int> closed_through_set(const MultiArrangement& a, const SubspaceGeom& g) {
  std::vector<int> through;
  for (int h = 0; h < int(a.hyperplanes.size()); ++h)
    if (form_vanishes_on(a.hyperplanes[h].form, g)) through.push_back(h);
  return through;
}

inline Edge edge_from_geometry(const MultiArrangement& a, const SubspaceGeom& g) {
  Edge e;
  e.point = g.point;
  e.direction = g.direction;
  e.through = closed_through_set(a, g);
  e.codim = a.n - int(g.direction.size());
  return e;
}

}  // namespace detail

// All distinct nonempty intersections of nonempty subsets of hyperplanes, each
// with its full through-set; ordered by codimension then through-set.
inline std::vector<Edge> intersection_lattice(const MultiArrangement& a) {
  std::map<std::vector<int>, Edge> seen;
  std::deque<std::vector<int>> queue;
  for (int h = 0; h < int(a.hyperplanes.size()); ++h) {
    auto g = detail::solve_forms(a, {h});
    Edge e = detail::edge_from_geometry(a, *g);
    if (!seen.count(e.through)) {
      queue.push_back(e.through);
      seen.emplace(e.through, std::move(e));
    }
  }
  while (!queue.empty()) {
    std::vector<int> key = queue.front();
    queue.pop_front();
    for (int h = 0; h < int(a.hyperplanes.size()); ++h) {
      if (std::binary_search(key.begin(), key.end(), h)) continue;
      std::vector<int> gens = key;
      gens.push_back(h);
      auto g = detail::solve_forms(a, gens);
      if (!g) continue;  // parallel constraints: empty intersection discarded
      Edge e = detail::edge_from_geometry(a, *g);
      if (!seen.count(e.through)) {
        queue.push_back(e.through);
        seen.emplace(e.through, std::move(e));
      }
    }
  }
  std::vector<Edge> edges;
  for (auto& [k, e] : seen) edges.push_back(std::move(e));
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.through < y.through;
  });
  return edges;
}

// The smallest edge containing a point of the divisor; throws off the divisor.
inline Edge edge_at_point(const MultiArrangement& a, const QVec& x) {
  if (int(x.size()) != a.n) throw std::invalid_argument("point dimension mismatch");
  std::vector<int> through;
  for (int h = 0; h < int(a.hyperplanes.size()); ++h)
    if (a.hyperplanes[h].form.eval(x) == 0) through.push_back(h);
  if (through.empty()) throw std::invalid_argument("point lies on no hyperplane");
  auto g = detail::solve_forms(a, through);
  return detail::edge_from_geometry(a, *g);
}

// Total splitting of the restriction F_W: the partition of the through-set
// into connected components of the linear matroid on the normal vectors,
// with the block degree vectors d^{(i)}_j = sum of mults_j over the block.
struct Splitting {
  std::vector<std::vector<int>> blocks;        // hyperplane indices, partitioning through
  std::vector<std::vector<Int>> degree_vectors;  // per block, length r
};

inline Splitting total_splitting(const MultiArrangement& a, const Edge& w) {
  const std::vector<int>& through = w.through;
  int m = int(through.size());
  std::vector<QVec> normals(m);
  for (int i = 0; i < m; ++i) {
    normals[i].resize(a.n);
    for (int j = 0; j < a.n; ++j) normals[i][j] = Rat(a.hyperplanes[through[i]].form.coeffs[j]);
  }

  // greedy basis by rational rank extension
  QMat basis_rows;
  std::vector<int> basis;  // positions into through
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  for (int i = 0; i < m; ++i) {
    QMat trial = basis_rows;
    trial.push_back(normals[i]);
    if (rank(trial) > int(basis_rows.size())) {
      basis_rows = std::move(trial);
      basis.push_back(i);
    }
  }
  // fundamental circuits of the non-basis elements glue the components
  std::set<int> in_basis(basis.begin(), basis.end());
  for (int i = 0; i < m; ++i) {
    if (in_basis.count(i)) continue;
    auto coords = in_row_space(basis_rows, normals[i]);
    for (size_t k = 0; k < coords->size(); ++k)
      if ((*coords)[k] != 0) unite(i, basis[k]);
  }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  Splitting s;
  for (auto& [root, members] : groups) {
    std::vector<int> block;
    std::vector<Int> deg(a.r, Int(0));
    for (int pos : members) {
      block.push_back(through[pos]);
      for (int j = 0; j < a.r; ++j) deg[j] += a.hyperplanes[through[pos]].mults[j];
    }
    std::sort(block.begin(), block.end());
    s.blocks.push_back(std::move(block));
    s.degree_vectors.push_back(std::move(deg));
  }
  // canonical order: by first hyperplane index
  std::vector<size_t> order(s.blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return s.blocks[x] < s.blocks[y]; });
  Splitting sorted;
  for (size_t i : order) {
    sorted.blocks.push_back(std::move(s.blocks[i]));
    sorted.degree_vectors.push_back(std::move(s.degree_vectors[i]));
  }
  return sorted;
}

inline bool is_dense(const MultiArrangement& a, const Edge& w) {
  return total_splitting(a, w).blocks.size() == 1;
}

inline std::vector<Edge> dense_edges(const MultiArrangement& a) {
  std::vector<Edge> out;
  for (const auto& e : intersection_lattice(a))
    if (is_dense(a, e)) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial of a restricted arrangement.

// Integer polynomial in t, coefficients ascending.
using TPoly = std::vector<Int>;

inline Int tpoly_eval(const TPoly& p, const Int& x) {
  Int v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// Characteristic polynomial of the sub-arrangement of hyperplanes through w,
// in the quotient of the ambient space by w: sum of mu(0,X) t^{dim X} over the
// intersection poset, Mobius values by recursive summation.
inline TPoly char_poly(const MultiArrangement& a, const Edge& w) {
  MultiArrangement sub;
  sub.n = a.n;
  sub.r = a.r;
  for (int h : w.through) sub.hyperplanes.push_back(a.hyperplanes[h]);
  std::vector<Edge> edges = intersection_lattice(sub);  // sorted by codim

  int c = w.codim;
  TPoly poly(c + 1, Int(0));
  poly[c] += 1;  // mu(ambient) = 1

  std::vector<Int> mu(edges.size());
  auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  for (size_t i = 0; i < edges.size(); ++i) {
    Int m(-1);  // -mu(ambient)
    for (size_t k = 0; k < i; ++k)
      if (edges[k].through != edges[i].through && subset(edges[k].through, edges[i].through))
        m -= mu[k];
    mu[i] = m;
    poly[c - edges[i].codim] += m;
  }
  return poly;
}

// chi of the projectivized complement: q(1) where char_poly = (t-1) q(t).
inline Int proj_euler_char(const MultiArrangement& a, const Edge& w) {
  TPoly p = char_poly(a, w);
  // synthetic division by (t - 1)
  TPoly q(p.size() > 1 ? p.size() - 1 : 0, Int(0));
  Int carry(0);
  for (size_t i = p.size(); i-- > 1;) {
    carry += p[i];
    q[i - 1] = carry;
  }
  if (carry + p[0] != 0) throw std::logic_error("characteristic polynomial not divisible by t-1");
  return tpoly_eval(q, Int(1));
}

// ---------------------------------------------------------------------------
// Constructions.

// Substitutes x_i = 1 into a central arrangement; hyperplanes whose form
// becomes constant drop out. The result lives in ambient dimension n-1.
inline MultiArrangement chart_restriction(const MultiArrangement& a, int i) {
  if (!is_central(a)) throw std::invalid_argument("chart restriction needs a central arrangement");
  if (i < 0 || i >= a.n) throw std::invalid_argument("chart variable out of range");
  MultiArrangement out;
  out.n = a.n - 1;
  out.r = a.r;
  for (const auto& h : a.hyperplanes) {
    std::vector<Int> coeffs;
    for (int j = 0; j < a.n; ++j)
      if (j != i) coeffs.push_back(h.form.coeffs[j]);
    bool zero = true;
    for (const Int& c : coeffs)
      if (c != 0) zero = false;
    if (zero) continue;  // the hyperplane {x_i = 0}
    out.hyperplanes.push_back({make_form(std::move(coeffs), Rat(h.form.coeffs[i])), h.mults});
  }
  validate(out);
  return out;
}

// External product: a1's forms in the first block of variables, a2's in the last.
inline MultiArrangement product(const MultiArrangement& a1, const MultiArrangement& a2) {
  if (a1.r != a2.r) throw std::invalid_argument("product: tuple lengths differ");
  MultiArrangement out;
  out.n = a1.n + a2.n;
  out.r = a1.r;
  for (const auto& h : a1.hyperplanes) {
    std::vector<Int> coeffs = h.form.coeffs;
    coeffs.resize(out.n, Int(0));
    out.hyperplanes.push_back({make_form(std::move(coeffs), h.form.constant), h.mults});
  }
  for (const auto& h : a2.hyperplanes) {
    std::vector<Int> coeffs(a1.n, Int(0));
    coeffs.insert(coeffs.end(), h.form.coeffs.begin(), h.form.coeffs.end());
    out.hyperplanes.push_back({make_form(std::move(coeffs), h.form.constant), h.mults});
  }
  validate(out);
  return out;
}

struct RegroupResult {
  MultiArrangement arrangement;
  bool degenerate = false;  // some nonconstant tuple entry was lost
};

// The specialization G = F^M: g_k = prod_j f_j^{m_kj} for a nonnegative p x r
// matrix, realized on multiplicities as mults'_k(H) = sum_j m_kj mults_j(H).
inline RegroupResult regroup(const MultiArrangement& a, const IntMatrix& m) {
  if (m.cols != a.r) throw std::invalid_argument("regroup: matrix width mismatch");
  for (const Int& e : m.a)
    if (e < 0) throw std::invalid_argument("regroup: negative matrix entry");
  RegroupResult res;
  res.arrangement.n = a.n;
  res.arrangement.r = m.rows;
  for (const auto& h : a.hyperplanes) {
    std::vector<Int> nm = mat_vec(m, h.mults);
    bool some = false;
    for (const Int& x : nm)
      if (x > 0) some = true;
    if (!some) continue;
    res.arrangement.hyperplanes.push_back({h.form, std::move(nm)});
  }
  for (int j = 0; j < a.r; ++j) {
    if (!tuple_entry_nonconstant(a, j)) continue;
    Int colsum(0);
    for (int k = 0; k < m.rows; ++k) colsum += m.at(k, j);
    if (colsum == 0) res.degenerate = true;
  }
  validate(res.arrangement);
  return res;
}

// The restriction F_W as an explicit arrangement on the quotient space X/W,
// for central arrangements: coordinates from a greedy completion of W's
// direction space to a basis.
inline MultiArrangement restriction_to_edge(const MultiArrangement& a, const Edge& w) {
  if (!is_central(a)) throw std::invalid_argument("edge restriction needs a central arrangement");
  int c = w.codim;
  QMat span = w.direction;
  std::vector<QVec> complement;
  for (int i = 0; i < a.n && int(complement.size()) < c; ++i) {
    QVec e(a.n, Rat(0));
    e[i] = 1;
    QMat trial = span;
    trial.push_back(e);
    if (rank(trial) > int(span.size())) {
      span = std::move(trial);
      complement.push_back(std::move(e));
    }
  }
  MultiArrangement out;
  out.n = c;
  out.r = a.r;
  for (int h : w.through) {
    const LinForm& f = a.hyperplanes[h].form;
    QVec vals(c);
    for (int t = 0; t < c; ++t) vals[t] = f.eval(complement[t]) - f.constant;  // linear part only
    Int den(1);
    for (const Rat& v : vals) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> coeffs(c);
    for (int t = 0; t < c; ++t) coeffs[t] = Rat(vals[t] * Rat(den)).get_num();
    out.hyperplanes.push_back({make_form(std::move(coeffs), Rat(0)), a.hyperplanes[h].mults});
  }
  validate(out);
  return out;
}

}  // namespace torsupp
