#include "hypsum/psi.hpp"

#include <stdexcept>

#include "hypsum/coefficients.hpp"
#include "hypsum/combinatorics.hpp"

namespace hypsum {

Int psi(unsigned m, unsigned n) {
  if (n == 0) throw std::invalid_argument("psi: n must be >= 1");
  if (m <= 1) return Int(n);
  return Int(n) + Int(m - 1) * Int(n - 1) * binomial_sym(n - 1, m - 1);
}

Rat psi_general(unsigned a, unsigned m, unsigned n) {
  if (m < 2) throw std::invalid_argument("psi_general: m must be >= 2");
  if (n == 0) throw std::invalid_argument("psi_general: n must be >= 1");
  const Rat prefactor = make_rat(Int(m) * Int(m - 1), Int(m) + Int(a));
  return Rat(binomial_sym(a + 1, n - 1)) +
         prefactor * Int(n - 1) * binomial_sym(m + a - 1, n - 1);
}

Int psi_via_a_table(unsigned m, unsigned n, const CoeffTriangle& a_table) {
  if (a_table.kind() != CoeffKind::a)
    throw std::invalid_argument("psi_via_a_table: table must have kind a");
  if (m < 2) throw std::invalid_argument("psi_via_a_table: m must be >= 2");
  if (m > a_table.max_m())
    throw std::invalid_argument("psi_via_a_table: table too small");
  if (n == 0) throw std::invalid_argument("psi_via_a_table: n must be >= 1");
  Rat sum(0);
  for (unsigned k = 2; k <= m; ++k) sum += a_table.at(m, k) * int_pow(Int(n), k);
  return require_integer(sum, "psi_via_a_table");
}

Int symmetry_residual(unsigned m, unsigned n) {
  const Int lhs = psi(m, n) - Int(n);
  // psi_n(0) = 0, the value forced by the exchange identity.
  const Int rhs = (m == 0 ? Int(0) : psi(n, m)) - Int(m);
  return lhs - rhs;
}

}  // namespace hypsum
