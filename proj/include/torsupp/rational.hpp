#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsupp {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q"; always stores lowest terms with positive denominator.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// An element of Q/Z, stored as the representative in [0,1).
struct QZ {
  Rat value;

  QZ() : value(0) {}
  explicit QZ(const Rat& q) : value(q - Rat(rat_floor(q))) {}

  bool is_zero() const { return value == 0; }
  // Order of e^{2*pi*i*value} as a root of unity.
  Int order() const { return value == 0 ? Int(1) : Int(value.get_den()); }

  friend QZ operator+(const QZ& a, const QZ& b) { return QZ(a.value + b.value); }
  friend QZ operator-(const QZ& a, const QZ& b) { return QZ(a.value - b.value); }
  friend QZ operator*(const Int& k, const QZ& a) { return QZ(Rat(k) * a.value); }
  friend QZ operator*(const Rat& k, const QZ& a) { return QZ(k * a.value); }
  friend bool operator==(const QZ& a, const QZ& b) { return a.value == b.value; }
  friend bool operator!=(const QZ& a, const QZ& b) { return !(a == b); }
  friend bool operator<(const QZ& a, const QZ& b) { return a.value < b.value; }
};

inline std::string qz_to_string(const QZ& q) { return rat_to_string(q.value); }

inline int cmp_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

inline int cmp_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace torsupp
