#include "hypsum/powersums.hpp"

#include <stdexcept>
#include <vector>

#include "hypsum/coefficients.hpp"
#include "hypsum/psi.hpp"

namespace hypsum {

namespace {
void validate(const HyperSumQuery& q) {
  if (q.m < 2) throw std::invalid_argument("hyper sum: m must be >= 2");
  if (q.n < 1) throw std::invalid_argument("hyper sum: n must be >= 1");
}
}  // namespace

Int hyper_sum_brute(const HyperSumQuery& q) {
  validate(q);
  if (q.a == 0) return int_pow(Int(q.n), q.m);
  // layer[v] holds S^(level)(v); each pass performs one nesting via a running
  // prefix sum, memoizing across (level, v) within this query.
  std::vector<Int> layer(q.n + 1);
  for (unsigned v = 1; v <= q.n; ++v) layer[v] = int_pow(Int(v), q.m);
  for (unsigned level = 1; level <= q.a; ++level)
    for (unsigned v = 2; v <= q.n; ++v) layer[v] += layer[v - 1];
  return layer[q.n];
}

Int hyper_sum_expansion(const HyperSumQuery& q, const CoeffTriangle& c_table) {
  validate(q);
  if (c_table.kind() != CoeffKind::c)
    throw std::invalid_argument("hyper_sum_expansion: table must have kind c");
  if (c_table.max_m() < q.m)
    throw std::invalid_argument("hyper_sum_expansion: table too small");
  Rat sum(0);
  for (unsigned k = 2; k <= q.m; ++k)
    sum += c_table.at(q.m, k) * psi_general(q.a, k, q.n);
  const Int value = require_integer(sum, "hyper_sum_expansion");
  if (value < 0) throw std::logic_error("hyper_sum_expansion: negative value");
  return value;
}

}  // namespace hypsum
