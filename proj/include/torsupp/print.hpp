#pragma once

#include <sstream>
#include <string>

#include "torsupp/affine.hpp"
#include "torsupp/arrangement.hpp"
#include "torsupp/spoly.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"

namespace torsupp {

inline std::string var_name(const std::string& base, int j, int total) {
  if (total == 1) return base;
  return base + std::to_string(j + 1);
}

// "s1+2s2-1", always over the integral representative of the form.
inline std::string form_to_string(const LinForm& f, const std::string& base = "s") {
  LinForm g = integral_form(f);
  int n = int(g.coeffs.size());
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < n; ++j) {
    if (g.coeffs[j] == 0) continue;
    Int c = g.coeffs[j];
    if (first) {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << c.get_str() << "*";
    } else {
      out << (c > 0 ? "+" : "-");
      Int a = c > 0 ? c : Int(-c);
      if (a != 1) out << a.get_str() << "*";
    }
    out << var_name(base, j, n);
    first = false;
  }
  Rat k = g.constant;
  if (first) return rat_to_string(k);
  if (k != 0) {
    if (k > 0) out << "+";
    out << rat_to_string(k);
  }
  return out.str();
}

// "t1*t2^2 = 1" or "t1*t2 = e(1/3)" with e(q) meaning exp(2 pi i q).
inline std::string coset_equation(const std::vector<Int>& exps, const QZ& zeta,
                                  const std::string& base = "t") {
  int n = int(exps.size());
  std::ostringstream out;
  bool any = false;
  for (int j = 0; j < n; ++j) {
    if (exps[j] == 0) continue;
    if (any) out << "*";
    out << var_name(base, j, n);
    if (exps[j] != 1) out << "^" << exps[j].get_str();
    any = true;
  }
  if (!any) out << "1";
  out << " = ";
  if (zeta.is_zero())
    out << "1";
  else
    out << "e(" << qz_to_string(zeta) << ")";
  return out.str();
}

inline std::string to_string(const TorsionCoset& c) {
  if (c.is_full_torus()) return "{ full torus }";
  std::ostringstream out;
  out << "{ ";
  for (int i = 0; i < c.lattice.rank(); ++i) {
    if (i) out << ", ";
    out << coset_equation(c.lattice.basis.row(i), c.torsion[i]);
  }
  out << " }";
  return out.str();
}

inline std::string to_string(const CosetUnion& u) {
  if (u.components.empty()) return "(empty)";
  std::ostringstream out;
  for (size_t i = 0; i < u.components.size(); ++i) {
    if (i) out << " u ";
    out << to_string(u.components[i]);
  }
  return out.str();
}

inline std::string to_string(const AffineSubspace& s) {
  std::ostringstream out;
  out << "{ ";
  for (size_t i = 0; i < s.forms.size(); ++i) {
    if (i) out << ", ";
    out << form_to_string(s.forms[i]) << " = 0";
  }
  out << " }";
  return out.str();
}

inline std::string to_string(const AffineLocus& l) {
  if (l.components.empty()) return "(empty)";
  std::ostringstream out;
  for (size_t i = 0; i < l.components.size(); ++i) {
    if (i) out << " u ";
    out << to_string(l.components[i]);
  }
  return out.str();
}

inline std::string to_string(const EigenvalueSet& e) {
  if (e.all_of_c_star) return "all of C*";
  std::ostringstream out;
  out << "{ ";
  for (size_t i = 0; i < e.values.size(); ++i) {
    if (i) out << ", ";
    out << "e(" << qz_to_string(e.values[i]) << ")";
  }
  out << " }";
  return out.str();
}

inline std::string to_string(const SPoly& p, const std::string& base = "s") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Rat coef = c;
    if (!first) {
      out << (coef > 0 ? " + " : " - ");
      if (coef < 0) coef = -coef;
    } else if (coef < 0) {
      out << "-";
      coef = -coef;
    }
    bool any_var = false;
    std::ostringstream vars;
    for (int j = 0; j < p.nvars; ++j) {
      if (e[j] == 0) continue;
      if (any_var) vars << "*";
      vars << var_name(base, j, p.nvars);
      if (e[j] > 1) vars << "^" << e[j];
      any_var = true;
    }
    if (!any_var) {
      out << rat_to_string(coef);
    } else {
      if (coef != 1) out << rat_to_string(coef) << "*";
      out << vars.str();
    }
    first = false;
  }
  return out.str();
}

// "(num)/((s1+1)(s2+1)^2)" over integral denominator forms.
inline std::string to_string(const SRationalFunction& z) {
  if (z.is_zero()) return "0";
  Rat scale(1);
  for (const auto& [f, m] : z.den) {
    Int d = f.constant.get_den();
    for (int k = 0; k < m; ++k) scale *= Rat(d);
  }
  SPoly num = scale * z.num;
  std::ostringstream out;
  std::string ns = to_string(num);
  if (z.den.empty()) return ns;
  if (num.terms.size() > 1)
    out << "(" << ns << ")";
  else
    out << ns;
  out << "/(";
  bool first = true;
  for (const auto& [f, m] : z.den) {
    if (!first) out << "";
    out << "(" << form_to_string(f) << ")";
    if (m > 1) out << "^" << m;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace torsupp
