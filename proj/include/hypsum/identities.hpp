#pragma once

#include <string>
#include <vector>

#include "hypsum/numeric.hpp"

namespace hypsum {

class CoeffTriangle;

// One exact check at one parameter point. pass holds iff lhs == rhs; both
// sides are kept so a failed comparison is debuggable.
struct IdentityReport {
  std::string identity;
  std::vector<unsigned long> point;
  Rat lhs;
  Rat rhs;
  bool pass = false;

  bool operator==(const IdentityReport& other) const {
    return identity == other.identity && point == other.point && lhs == other.lhs &&
           rhs == other.rhs && pass == other.pass;
  }
};

IdentityReport make_report(std::string identity, std::vector<unsigned long> point,
                           Rat lhs, Rat rhs);

struct Triple {
  unsigned a = 0, b = 0, c = 0;
};

bool is_pythagorean(const Triple& t);

// T_m^alpha = sum_{k=2..m} c_mk k^alpha. Integer-valued; checked.
Rat weighted_power_sum(unsigned m, unsigned alpha, const CoeffTriangle& c_table);

// U_m^alpha = sum_{k=2..m} a_mk psi_alpha(k), with psi_0 and psi_1 acting as
// the identity. Rational in general (U_5^2 = 65/3).
Rat weighted_psi_sum(unsigned m, unsigned alpha, const CoeffTriangle& a_table);

// T(m,1) = m and U(m,1) = m for 2 <= m <= m_max; two reports per m.
std::vector<IdentityReport> check_weighted_sums(unsigned m_max, const CoeffTriangle& a_table,
                                                const CoeffTriangle& c_table);

// sum_{k=2..m} c_mk n^rising(k-1) / (k-2)! = (n^m - n)/(n - 1), n >= 2.
IdentityReport check_rising_factorial(unsigned m, unsigned n, const CoeffTriangle& c_table);

// The binomial-weighted variant sum_{k=2..m} c_mk B_{k-1,n-1} compared with
// (n^(m-1) - n)/(n - 1). Does NOT hold in general (m = 3, n = 2 gives 3 vs 2);
// kept as a documented negative check.
IdentityReport check_binomial_weighted_sum(unsigned m, unsigned n,
                                           const CoeffTriangle& c_table);

// T(m, alpha) - m = T(alpha, m) - alpha, both indices >= 2.
IdentityReport check_exchange(unsigned m, unsigned alpha, const CoeffTriangle& c_table);

// T(m,2) - m = 2^m - 2 and T(m,3) - m = 3^m - 3 for 2 <= m <= m_max.
std::vector<IdentityReport> check_mersenne_family(unsigned m_max,
                                                  const CoeffTriangle& c_table);

// n^m - n + m = sum_{l=2..n} a_nl T(m, l), m >= 2, n >= 2.
IdentityReport check_power_expansion(unsigned m, unsigned n, const CoeffTriangle& a_table,
                                     const CoeffTriangle& c_table);

// sum_{l=2..max(A,B,C)} 2^l (a_Al + a_Bl - a_Cl) - (2 + C - A - B).
// Equals A^2 + B^2 - C^2 for every triple with members >= 2, hence zero
// exactly on Pythagorean triples.
Rat pythagoras_residual(const Triple& t, const CoeffTriangle& a_table);

// sum_{l=2..max(A,B,C)} (2^(l-1) - 1)(a_Al + a_Bl - a_Cl) - (C - A - B)/2.
// Equals (A^2 + B^2 - C^2)/2 for every triple with members >= 2.
Rat mersenne_footnote_residual(const Triple& t, const CoeffTriangle& a_table);

// All triples with A <= B < C <= c_max and A^2 + B^2 = C^2, ascending by
// (C, B, A).
std::vector<Triple> enumerate_pythagorean(unsigned c_max);

}  // namespace hypsum
