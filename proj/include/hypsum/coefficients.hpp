#pragma once

#include <optional>
#include <vector>

#include "hypsum/numeric.hpp"
#include "hypsum/sweep.hpp"

namespace hypsum {

enum class CoeffKind { a, c };

enum class BuildRoute { closed_form, recursion, explicit_formula, solve };

BuildRoute default_route(CoeffKind kind);

// Lower-triangular table of exact rationals, entry (m, k) defined for
// 2 <= k <= m <= max_m. Entries outside that range are implicitly zero.
// Immutable after build; reads are safe from any thread. The route tag
// records how the entries were produced (absent for parsed tables);
// equality compares kind and entries only.
class CoeffTriangle {
 public:
  static CoeffTriangle build(CoeffKind kind, unsigned max_m, BuildRoute route,
                             ExecMode mode = ExecMode::serial);
  static CoeffTriangle from_rows(CoeffKind kind, std::vector<std::vector<Rat>> rows,
                                 std::optional<BuildRoute> route);

  CoeffKind kind() const { return kind_; }
  unsigned max_m() const { return static_cast<unsigned>(rows_.size()) + 1; }
  std::optional<BuildRoute> route() const { return route_; }

  // Entry (m, k); throws unless 2 <= k <= m <= max_m.
  const Rat& at(unsigned m, unsigned k) const;

  // Entry (m, k) with the zero extension outside the triangle. m must still
  // be a built row.
  const Rat& at_or_zero(unsigned m, long k) const;

  // Row m, entries k = 2..m.
  const std::vector<Rat>& row(unsigned m) const;

  bool operator==(const CoeffTriangle& other) const {
    return kind_ == other.kind_ && rows_ == other.rows_;
  }

  // Test hook: adds delta to entry (m, k). Breaks the table on purpose so
  // failure paths can be exercised end to end.
  void corrupt_entry(unsigned m, unsigned k, const Rat& delta);

 private:
  CoeffTriangle(CoeffKind kind, std::vector<std::vector<Rat>> rows,
                std::optional<BuildRoute> route);

  CoeffKind kind_;
  std::optional<BuildRoute> route_;
  std::vector<std::vector<Rat>> rows_;  // rows_[i] is row m = i + 2
};

// a_mk from the unsigned-Stirling closed form
// ( [m-1, k-1] - [m-1, k] ) / (m-2)!, for 2 <= k <= m.
Rat a_closed(unsigned m, unsigned k);

// Row m of the a-triangle from row m-1 via
// a_mk = a_{m-1,k} + a_{m-1,k-1} / (m-2).
// prev_row holds row m-1 for k = 1..m-1, i.e. augmented in front with the
// boundary value a_{m-1,1} = -1, the unique boundary under which the
// recursion reproduces the closed form.
std::vector<Rat> a_recursion_row(unsigned m, const std::vector<Rat>& prev_row);

// c_mk from the Stirling-2 formula (k-2)! * sum_{l=2..m} {l-1, k-1} (-1)^(l-k).
Rat c_explicit(unsigned m, unsigned k);

// Row m of the c-triangle as the unique solution of the evaluation system
// n^m = sum_{k=2..m} c_mk psi_k(n) at the nodes n = 2..m. Independent of the
// Stirling-2 route.
std::vector<Rat> c_solve_row(unsigned m);

// sum_{l=2..m} a_ml c_lk - delta_mk; identically zero for valid tables.
Rat orthogonality_residual(const CoeffTriangle& a_table, const CoeffTriangle& c_table,
                           unsigned m, unsigned k);

}  // namespace hypsum
