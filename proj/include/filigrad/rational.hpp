#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace filigrad {

// Exact scalar types. mpq_class values are kept canonical (reduced fraction,
// positive denominator) by construction through rat() / parse_rat().
using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parse "p", "-p" or "p/q" into a reduced rational.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q(Int(s), 1);
      q.canonicalize();
      return q;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace filigrad
