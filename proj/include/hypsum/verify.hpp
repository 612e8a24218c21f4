#pragma once

#include <string>
#include <vector>

#include "hypsum/coefficients.hpp"
#include "hypsum/identities.hpp"
#include "hypsum/sweep.hpp"

namespace hypsum::verify {

// Sweep bounds. Defaults cover every hand-checked example and finish in
// seconds.
struct Bounds {
  unsigned max_m = 20;
  unsigned max_alpha = 15;
  unsigned max_n = 12;
  unsigned max_c = 50;
};

// Each driver walks its parameter grid in a fixed order and returns one
// report per point; the parallel path changes the schedule, never the output.

std::vector<IdentityReport> row_sums(const CoeffTriangle& a, const CoeffTriangle& c,
                                     unsigned max_m, ExecMode mode);
std::vector<IdentityReport> weighted_sums(const CoeffTriangle& a, const CoeffTriangle& c,
                                          unsigned max_m, ExecMode mode);
std::vector<IdentityReport> orthogonality(const CoeffTriangle& a, const CoeffTriangle& c,
                                          unsigned max_m, ExecMode mode);
std::vector<IdentityReport> rising_factorial_sweep(const CoeffTriangle& c, unsigned max_m,
                                                   unsigned max_n, ExecMode mode);
std::vector<IdentityReport> exchange(const CoeffTriangle& c, unsigned max_m,
                                     unsigned max_alpha, ExecMode mode);
std::vector<IdentityReport> mersenne(const CoeffTriangle& c, unsigned max_m, ExecMode mode);
std::vector<IdentityReport> power_expansion(const CoeffTriangle& a, const CoeffTriangle& c,
                                            unsigned max_m, unsigned max_n, ExecMode mode);

// Both residual forms over the enumerated Pythagorean triples with C <= max_c.
std::vector<IdentityReport> pythagoras(const CoeffTriangle& a, unsigned max_c, ExecMode mode);

// The residual contracts over the full cube [lo, hi]^3, Pythagorean or not:
// residual = A^2 + B^2 - C^2 and footnote residual = (A^2 + B^2 - C^2)/2.
std::vector<IdentityReport> pythagoras_grid(const CoeffTriangle& a, unsigned lo, unsigned hi,
                                            ExecMode mode);

// Brute vs expansion hyper-sums over a in [0, max_a], m in [2, max_m],
// n in [1, max_n].
std::vector<IdentityReport> hyper_sums(const CoeffTriangle& c, unsigned max_a, unsigned max_m,
                                       unsigned max_n, ExecMode mode);

struct FamilyRun {
  std::string family;
  std::string note;  // extra summary info, e.g. the triple count
  std::vector<IdentityReport> reports;
};

// The CLI-facing families, in canonical order.
const std::vector<std::string>& family_names();

struct TableSet {
  CoeffTriangle a;
  CoeffTriangle c;
};

// Builds the a- and c-tables just large enough for the selected families.
TableSet build_tables(const std::vector<std::string>& families, const Bounds& b,
                      ExecMode mode);

// Runs the selected families against prebuilt tables, in canonical order.
std::vector<FamilyRun> run_families(const std::vector<std::string>& families,
                                    const TableSet& tables, const Bounds& b, ExecMode mode);

bool all_pass(const std::vector<IdentityReport>& reports);
bool all_pass(const std::vector<FamilyRun>& runs);

}  // namespace hypsum::verify
