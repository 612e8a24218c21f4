#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypsum {

// Arbitrary-precision integer and canonical rational. mpq_class keeps
// gcd(|num|, den) = 1 and den >= 1 after every operation, so Rat values are
// always in the normalized form the tables and reports rely on.
using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational. den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// The rational as an Int; throws when den != 1.
inline Int require_integer(const Rat& q, const char* context) {
  if (!is_integer(q))
    throw std::logic_error(std::string(context) + ": expected integer, got " +
                           q.get_str());
  return q.get_num();
}

// base^exp, exp >= 0.
inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace hypsum
