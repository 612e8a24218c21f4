#include "hypsum/coefficients.hpp"

#include <stdexcept>
#include <utility>

#include "hypsum/combinatorics.hpp"
#include "hypsum/linsolve.hpp"
#include "hypsum/psi.hpp"

namespace hypsum {

BuildRoute default_route(CoeffKind kind) {
  return kind == CoeffKind::a ? BuildRoute::closed_form : BuildRoute::explicit_formula;
}

namespace {

// single source for the per-entry formulas; build() and the per-entry
// functions differ only in where the Stirling numbers come from
template <typename Lookup>
Rat a_closed_entry(unsigned m, unsigned k, Lookup&& s1) {
  return make_rat(s1(m - 1, k - 1) - s1(m - 1, k), factorial(m - 2));
}

template <typename Lookup>
Rat c_explicit_entry(unsigned m, unsigned k, Lookup&& s2) {
  Int sum = 0;
  for (unsigned l = k; l <= m; ++l) {
    const Int term = s2(l - 1, k - 1);
    if ((l - k) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return Rat(factorial(k - 2) * sum);
}

}  // namespace

Rat a_closed(unsigned m, unsigned k) {
  if (m < 2 || k < 2 || k > m)
    throw std::invalid_argument("a_closed: need 2 <= k <= m");
  return a_closed_entry(m, k, stirling1_unsigned);
}

std::vector<Rat> a_recursion_row(unsigned m, const std::vector<Rat>& prev_row) {
  if (m < 3) throw std::invalid_argument("a_recursion_row: m must be >= 3");
  if (prev_row.size() != static_cast<std::size_t>(m - 1))
    throw std::invalid_argument("a_recursion_row: prev_row must hold k = 1..m-1");
  // prev_row[j] is a_{m-1, j+1}; entries beyond k = m-1 are zero.
  auto prev_at = [&](unsigned k) -> Rat {
    return k <= m - 1 ? prev_row[k - 1] : Rat(0);
  };
  std::vector<Rat> row;
  row.reserve(m - 1);
  for (unsigned k = 2; k <= m; ++k)
    row.push_back(prev_at(k) + prev_at(k - 1) / Rat(Int(m - 2)));
  return row;
}

Rat c_explicit(unsigned m, unsigned k) {
  if (m < 2 || k < 2 || k > m)
    throw std::invalid_argument("c_explicit: need 2 <= k <= m");
  return c_explicit_entry(m, k, stirling2);
}

std::vector<Rat> c_solve_row(unsigned m) {
  if (m < 2) throw std::invalid_argument("c_solve_row: m must be >= 2");
  // Evaluation nodes n = 2..m; n = 1 would give the degenerate all-ones row.
  const std::size_t dim = m - 1;
  std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim));
  std::vector<Rat> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const unsigned n = static_cast<unsigned>(i) + 2;
    for (std::size_t j = 0; j < dim; ++j) {
      const unsigned k = static_cast<unsigned>(j) + 2;
      mat[i][j] = Rat(psi(k, n));
    }
    rhs[i] = Rat(int_pow(Int(n), m));
  }
  return solve_exact(std::move(mat), std::move(rhs));
}

CoeffTriangle::CoeffTriangle(CoeffKind kind, std::vector<std::vector<Rat>> rows,
                             std::optional<BuildRoute> route)
    : kind_(kind), route_(route), rows_(std::move(rows)) {}

CoeffTriangle CoeffTriangle::from_rows(CoeffKind kind, std::vector<std::vector<Rat>> rows,
                                       std::optional<BuildRoute> route) {
  if (rows.empty()) throw std::invalid_argument("CoeffTriangle: max_m must be >= 2");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != i + 1)
      throw std::invalid_argument("CoeffTriangle: row " + std::to_string(i + 2) +
                                  " must hold k = 2.." + std::to_string(i + 2));
  return CoeffTriangle(kind, std::move(rows), route);
}

CoeffTriangle CoeffTriangle::build(CoeffKind kind, unsigned max_m, BuildRoute route,
                                   ExecMode mode) {
  if (max_m < 2) throw std::invalid_argument("CoeffTriangle::build: max_m must be >= 2");

  std::vector<std::vector<Rat>> rows;
  switch (route) {
    case BuildRoute::closed_form: {
      if (kind != CoeffKind::a)
        throw std::invalid_argument("closed-form route exists only for kind a");
      const StirlingTriangle s1(StirlingKind::first_unsigned, max_m - 1);
      const auto lookup = [&](unsigned n, unsigned k) -> const Int& { return s1.at(n, k); };
      rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
        const unsigned m = static_cast<unsigned>(i) + 2;
        std::vector<Rat> row;
        row.reserve(m - 1);
        for (unsigned k = 2; k <= m; ++k) row.push_back(a_closed_entry(m, k, lookup));
        return row;
      });
      break;
    }
    case BuildRoute::recursion: {
      if (kind != CoeffKind::a)
        throw std::invalid_argument("recursion route exists only for kind a");
      rows.push_back({Rat(1)});
      for (unsigned m = 3; m <= max_m; ++m) {
        std::vector<Rat> prev{Rat(-1)};  // boundary a_{m-1,1} = -1
        prev.insert(prev.end(), rows.back().begin(), rows.back().end());
        rows.push_back(a_recursion_row(m, prev));
      }
      break;
    }
    case BuildRoute::explicit_formula: {
      if (kind != CoeffKind::c)
        throw std::invalid_argument("explicit route exists only for kind c");
      const StirlingTriangle s2(StirlingKind::second, max_m - 1);
      const auto lookup = [&](unsigned n, unsigned k) -> const Int& { return s2.at(n, k); };
      rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
        const unsigned m = static_cast<unsigned>(i) + 2;
        std::vector<Rat> row;
        row.reserve(m - 1);
        for (unsigned k = 2; k <= m; ++k) row.push_back(c_explicit_entry(m, k, lookup));
        return row;
      });
      break;
    }
    case BuildRoute::solve: {
      if (kind != CoeffKind::c)
        throw std::invalid_argument("solve route exists only for kind c");
      rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
        return c_solve_row(static_cast<unsigned>(i) + 2);
      });
      break;
    }
  }
  return CoeffTriangle(kind, std::move(rows), route);
}

const Rat& CoeffTriangle::at(unsigned m, unsigned k) const {
  if (m < 2 || m > max_m())
    throw std::out_of_range("CoeffTriangle::at: row " + std::to_string(m) +
                            " not in triangle (max_m = " + std::to_string(max_m()) + ")");
  if (k < 2 || k > m)
    throw std::out_of_range("CoeffTriangle::at: need 2 <= k <= m");
  return rows_[m - 2][k - 2];
}

const Rat& CoeffTriangle::at_or_zero(unsigned m, long k) const {
  static const Rat zero(0);
  if (m < 2 || m > max_m())
    throw std::out_of_range("CoeffTriangle::at_or_zero: row not in triangle");
  if (k < 2 || k > static_cast<long>(m)) return zero;
  return rows_[m - 2][static_cast<std::size_t>(k - 2)];
}

const std::vector<Rat>& CoeffTriangle::row(unsigned m) const {
  if (m < 2 || m > max_m())
    throw std::out_of_range("CoeffTriangle::row: row not in triangle");
  return rows_[m - 2];
}

void CoeffTriangle::corrupt_entry(unsigned m, unsigned k, const Rat& delta) {
  at(m, k);  // bounds check
  rows_[m - 2][k - 2] += delta;
}

Rat orthogonality_residual(const CoeffTriangle& a_table, const CoeffTriangle& c_table,
                           unsigned m, unsigned k) {
  if (a_table.kind() != CoeffKind::a || c_table.kind() != CoeffKind::c)
    throw std::invalid_argument("orthogonality_residual: tables must be (a, c)");
  if (k < 2 || k > m)
    throw std::invalid_argument("orthogonality_residual: need 2 <= k <= m");
  if (m > a_table.max_m() || m > c_table.max_m())
    throw std::invalid_argument("orthogonality_residual: table too small");
  Rat dot(0);
  for (unsigned l = 2; l <= m; ++l)
    dot += a_table.at(m, l) * c_table.at_or_zero(l, static_cast<long>(k));
  return dot - (m == k ? Rat(1) : Rat(0));
}

}  // namespace hypsum
