#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "torsupp/affine.hpp"
#include "torsupp/rational.hpp"

namespace torsupp {

// Sparse multivariate polynomial over Q; no zero coefficients are stored.
struct SPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  static SPoly zero(int n) { return SPoly{n, {}}; }
  static SPoly constant(int n, const Rat& c) {
    SPoly p = zero(n);
    if (c != 0) p.terms.emplace(std::vector<int>(n, 0), c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  bool is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (int e : terms.begin()->first)
      if (e != 0) return false;
    return true;
  }

  void add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
      terms.emplace(exps, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;
  }

  friend SPoly operator+(const SPoly& a, const SPoly& b) {
    SPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
  }
  friend SPoly operator-(const SPoly& a, const SPoly& b) {
    SPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, -c);
    return out;
  }
  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out = zero(a.nvars);
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e(a.nvars);
        for (int j = 0; j < a.nvars; ++j) e[j] = ea[j] + eb[j];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend SPoly operator*(const Rat& c, const SPoly& a) {
    SPoly out = zero(a.nvars);
    if (c == 0) return out;
    for (const auto& [e, x] : a.terms) out.terms.emplace(e, c * x);
    return out;
  }

  friend bool operator==(const SPoly& a, const SPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }
};

inline SPoly spoly_from_form(int nvars, const LinForm& f) {
  SPoly p = SPoly::constant(nvars, f.constant);
  for (int j = 0; j < nvars; ++j) {
    if (f.coeffs[j] == 0) continue;
    std::vector<int> e(nvars, 0);
    e[j] = 1;
    p.add_term(e, Rat(f.coeffs[j]));
  }
  return p;
}

// Exact quotient by an affine-linear form, or absent when not divisible.
// Polynomial division in the pivot variable: the divisor has degree one there
// with a constant leading coefficient, so the remainder is pivot-free and
// divisibility is remainder == 0.
inline std::optional<SPoly> divide_by_form(const SPoly& p, const LinForm& f) {
  int pivot = -1;
  for (size_t j = 0; j < f.coeffs.size(); ++j)
    if (f.coeffs[j] != 0) {
      pivot = int(j);
      break;
    }
  if (pivot < 0) throw std::invalid_argument("division by a constant form");
  Rat lead(f.coeffs[pivot]);
  SPoly divisor = spoly_from_form(p.nvars, f);
  SPoly q = SPoly::zero(p.nvars);
  SPoly rem = p;
  int d;
  while ((d = rem.degree_in(pivot)) >= 1) {
    SPoly t = SPoly::zero(p.nvars);
    for (const auto& [e, c] : rem.terms) {
      if (e[pivot] != d) continue;
      std::vector<int> e2 = e;
      --e2[pivot];
      t.add_term(e2, c / lead);
    }
    q = q + t;
    rem = rem - t * divisor;
  }
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

// Substitution s_j -> lin[j] . v + cst[j] into a polynomial in the s variables.
struct AffineAssignment {
  int target_dim = 0;
  std::vector<std::vector<Int>> lin;  // per source variable, length target_dim
  std::vector<Rat> cst;               // per source variable
};

inline SPoly substitute(const SPoly& p, const AffineAssignment& map) {
  if (int(map.lin.size()) != p.nvars || int(map.cst.size()) != p.nvars)
    throw std::invalid_argument("substitution arity mismatch");
  SPoly out = SPoly::zero(map.target_dim);
  // image of each source variable
  std::vector<SPoly> image(p.nvars);
  for (int j = 0; j < p.nvars; ++j) {
    LinForm f;
    f.coeffs = map.lin[j];
    f.constant = map.cst[j];
    image[j] = spoly_from_form(map.target_dim, f);
  }
  for (const auto& [e, c] : p.terms) {
    SPoly term = SPoly::constant(map.target_dim, c);
    for (int j = 0; j < p.nvars; ++j)
      for (int k = 0; k < e[j]; ++k) term = term * image[j];
    out = out + term;
  }
  return out;
}

}  // namespace torsupp
