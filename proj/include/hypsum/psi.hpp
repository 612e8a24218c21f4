#pragma once

#include "hypsum/numeric.hpp"

namespace hypsum {

class CoeffTriangle;

// The basis polynomials psi_m(n) = n + (m-1)(n-1) B_{n-1,m-1} for m >= 2,
// with psi_0 = psi_1 = identity. Defined for n >= 1.
Int psi(unsigned m, unsigned n);

// psi_m^(a)(n) = B_{a+1,n-1} + m(m-1)/(m+a) (n-1) B_{m+a-1,n-1} as an exact
// rational. Requires m >= 2 and n >= 1; a = 0 coincides with psi(m, n).
// Integrality at integer arguments is checked by callers and tests, not
// assumed here.
Rat psi_general(unsigned a, unsigned m, unsigned n);

// Row m of an a-kind triangle evaluated as the polynomial
// sum_{k=2..m} a_mk n^k. Equals psi(m, n) exactly.
Int psi_via_a_table(unsigned m, unsigned n, const CoeffTriangle& a_table);

// (psi_m(n) - n) - (psi_n(m) - m); identically zero. m = 0 is allowed via
// the extensions psi_0 = identity and psi_n(0) = 0.
Int symmetry_residual(unsigned m, unsigned n);

}  // namespace hypsum
