#pragma once

#include <vector>

#include "hypsum/numeric.hpp"

namespace hypsum {

Int factorial(unsigned n);

// Index-symmetric binomial: (a+b)! / (a! b!). Computed by the multiplicative
// formula, never through full factorials.
Int binomial_sym(unsigned a, unsigned b);

// n (n+1) ... (n+k-1); empty product for k = 0.
Int rising_factorial(unsigned n, unsigned k);

enum class StirlingKind { first_unsigned, second };

// Lower-triangular table of Stirling numbers, built row by row from the
// recurrence of its kind. Immutable once constructed; reads are safe from
// any thread.
class StirlingTriangle {
 public:
  StirlingTriangle(StirlingKind kind, unsigned max_n);

  StirlingKind kind() const { return kind_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

  // Entry (n, k). Zero for k > n; n beyond the built rows is out of range.
  const Int& at(unsigned n, unsigned k) const;

  // Row n, entries k = 0..n.
  const std::vector<Int>& row(unsigned n) const;

 private:
  StirlingKind kind_;
  std::vector<std::vector<Int>> rows_;
};

// Convenience lookups backed by a thread-local triangle that grows on demand.
Int stirling1_unsigned(unsigned n, unsigned k);
Int stirling2(unsigned n, unsigned k);

}  // namespace hypsum
