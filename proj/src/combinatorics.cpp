#include "hypsum/combinatorics.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace hypsum {

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial_sym(unsigned a, unsigned b) {
  const unsigned n = a + b;
  unsigned k = std::min(a, b);
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

Int rising_factorial(unsigned n, unsigned k) {
  Int r = 1;
  for (unsigned j = 0; j < k; ++j) r *= n + j;
  return r;
}

StirlingTriangle::StirlingTriangle(StirlingKind kind, unsigned max_n) : kind_(kind) {
  rows_.resize(max_n + 1);
  rows_[0] = {Int(1)};
  for (unsigned n = 1; n <= max_n; ++n) {
    auto& row = rows_[n];
    const auto& prev = rows_[n - 1];
    row.resize(n + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= n; ++k) {
      // first kind: (n-1) * prev[k] + prev[k-1]; second kind: k * prev[k] + prev[k-1]
      const unsigned factor = kind == StirlingKind::first_unsigned ? n - 1 : k;
      row[k] = (k < prev.size() ? Int(factor) * prev[k] : Int(0)) + prev[k - 1];
    }
  }
}

namespace {
const Int& zero_int() {
  static const Int z(0);
  return z;
}
}  // namespace

const Int& StirlingTriangle::at(unsigned n, unsigned k) const {
  if (n >= rows_.size())
    throw std::out_of_range("StirlingTriangle::at: n exceeds built rows");
  if (k > n) return zero_int();
  return rows_[n][k];
}

const std::vector<Int>& StirlingTriangle::row(unsigned n) const {
  if (n >= rows_.size())
    throw std::out_of_range("StirlingTriangle::row: n exceeds built rows");
  return rows_[n];
}

namespace {

Int cached_stirling(StirlingKind kind, unsigned n, unsigned k) {
  thread_local std::unique_ptr<StirlingTriangle> cache[2];
  auto& slot = cache[kind == StirlingKind::first_unsigned ? 0 : 1];
  if (!slot || slot->max_n() < n) {
    unsigned grow = std::max({n, 16u, slot ? 2 * slot->max_n() : 0u});
    slot = std::make_unique<StirlingTriangle>(kind, grow);
  }
  return slot->at(n, k);
}

}  // namespace

Int stirling1_unsigned(unsigned n, unsigned k) {
  return cached_stirling(StirlingKind::first_unsigned, n, k);
}

Int stirling2(unsigned n, unsigned k) {
  return cached_stirling(StirlingKind::second, n, k);
}

}  // namespace hypsum
