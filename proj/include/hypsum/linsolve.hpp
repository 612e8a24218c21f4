#pragma once

#include <vector>

#include "hypsum/numeric.hpp"

namespace hypsum {

// Solves A x = b exactly over the rationals. A is n x n, row major.
// Pivots on the first nonzero entry of each column; with exact arithmetic
// any nonzero pivot is valid. Throws std::logic_error when A is singular.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace hypsum
