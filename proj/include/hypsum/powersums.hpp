#pragma once

#include "hypsum/numeric.hpp"

namespace hypsum {

class CoeffTriangle;

// Selects the hyper-sum S_m^(a)(n): the a-fold nested sum of m-th powers up
// to n. a = 0 is the bare monomial n^m, a = 1 the ordinary power sum.
struct HyperSumQuery {
  unsigned a = 0;  // nesting order
  unsigned m = 2;  // power, >= 2
  unsigned n = 1;  // upper limit, >= 1
};

// Literal route: S^(a)(n) = sum_{v=1..n} S^(a-1)(v), memoized per query.
Int hyper_sum_brute(const HyperSumQuery& q);

// Expansion route: sum_{k=2..m} c_mk psi_k^(a)(n). Must equal the literal
// route; the result is checked to be a nonnegative integer.
Int hyper_sum_expansion(const HyperSumQuery& q, const CoeffTriangle& c_table);

}  // namespace hypsum
