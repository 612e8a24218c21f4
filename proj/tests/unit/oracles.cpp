#include "oracles.hpp"

#include <stdexcept>

#include "hypsum/combinatorics.hpp"

namespace hypsum::testing {

namespace {
// sums v^m over v = 1..limit at level 1, recursing one nesting per level
Int nested_level(unsigned level, unsigned m, unsigned limit) {
  Int sum = 0;
  for (unsigned v = 1; v <= limit; ++v) {
    if (level == 1)
      sum += int_pow(Int(v), m);
    else
      sum += nested_level(level - 1, m, v);
  }
  return sum;
}
}  // namespace

Int nested_sum_literal(unsigned a, unsigned m, unsigned n) {
  if (a == 0) return int_pow(Int(n), m);
  return nested_level(a, m, n);
}

std::vector<Rat> psi_poly_coeffs(unsigned m) {
  if (m < 2) throw std::invalid_argument("psi_poly_coeffs: m must be >= 2");
  // product n (n+1) ... (n+m-2), integer coefficients
  std::vector<Int> prod{Int(1)};
  for (unsigned j = 0; j + 1 < m; ++j) {
    std::vector<Int> next(prod.size() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];          // * n
      next[i] += Int(j) * prod[i];     // * j
    }
    prod = std::move(next);
  }
  // * (n - 1), then / (m-2)!, then + n
  std::vector<Rat> coeffs(prod.size() + 1, Rat(0));
  const Int fact = factorial(m - 2);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    coeffs[i + 1] += make_rat(prod[i], fact);
    coeffs[i] -= make_rat(prod[i], fact);
  }
  coeffs[1] += 1;
  return coeffs;
}

}  // namespace hypsum::testing
