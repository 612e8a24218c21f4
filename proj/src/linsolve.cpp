#include "hypsum/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace hypsum {

std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw std::invalid_argument("solve_exact: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_exact: matrix not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("solve_exact: singular system");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rat factor = a[r][col] / a[col][col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= factor * a[col][cc];
      b[r] -= factor * b[col];
    }
  }

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace hypsum
