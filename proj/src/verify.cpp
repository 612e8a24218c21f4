#include "hypsum/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hypsum/powersums.hpp"

namespace hypsum::verify {

namespace {

std::vector<std::array<unsigned, 2>> grid2(unsigned lo1, unsigned hi1, unsigned lo2,
                                           unsigned hi2) {
  std::vector<std::array<unsigned, 2>> pts;
  for (unsigned x = lo1; x <= hi1; ++x)
    for (unsigned y = lo2; y <= hi2; ++y) pts.push_back({x, y});
  return pts;
}

}  // namespace

std::vector<IdentityReport> row_sums(const CoeffTriangle& a, const CoeffTriangle& c,
                                     unsigned max_m, ExecMode mode) {
  auto rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
    const unsigned m = static_cast<unsigned>(i) + 2;
    Rat sum_a(0), sum_c(0);
    for (unsigned k = 2; k <= m; ++k) {
      sum_a += a.at(m, k);
      sum_c += c.at(m, k);
    }
    return std::array<IdentityReport, 2>{
        make_report("row-sum-a", {m}, sum_a, Rat(1)),
        make_report("row-sum-c", {m}, sum_c, Rat(1))};
  });
  std::vector<IdentityReport> out;
  for (auto& pair : rows)
    for (auto& r : pair) out.push_back(std::move(r));
  return out;
}

std::vector<IdentityReport> weighted_sums(const CoeffTriangle& a, const CoeffTriangle& c,
                                          unsigned max_m, ExecMode mode) {
  auto rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
    const unsigned m = static_cast<unsigned>(i) + 2;
    return std::array<IdentityReport, 2>{
        make_report("weighted-sum-c", {m}, weighted_power_sum(m, 1, c), Rat(Int(m))),
        make_report("weighted-sum-a", {m}, weighted_psi_sum(m, 1, a), Rat(Int(m)))};
  });
  std::vector<IdentityReport> out;
  for (auto& pair : rows)
    for (auto& r : pair) out.push_back(std::move(r));
  return out;
}

std::vector<IdentityReport> orthogonality(const CoeffTriangle& a, const CoeffTriangle& c,
                                          unsigned max_m, ExecMode mode) {
  std::vector<std::array<unsigned, 2>> pts;
  for (unsigned m = 2; m <= max_m; ++m)
    for (unsigned k = 2; k <= m; ++k) pts.push_back({m, k});
  return map_indexed(pts.size(), mode, [&](std::size_t i) {
    const auto [m, k] = pts[i];
    const Rat delta = m == k ? Rat(1) : Rat(0);
    const Rat dot = orthogonality_residual(a, c, m, k) + delta;
    return make_report("orthogonality", {m, k}, dot, delta);
  });
}

std::vector<IdentityReport> rising_factorial_sweep(const CoeffTriangle& c, unsigned max_m,
                                                   unsigned max_n, ExecMode mode) {
  const auto pts = grid2(2, max_m, 2, max_n);
  return map_indexed(pts.size(), mode, [&](std::size_t i) {
    return check_rising_factorial(pts[i][0], pts[i][1], c);
  });
}

std::vector<IdentityReport> exchange(const CoeffTriangle& c, unsigned max_m,
                                     unsigned max_alpha, ExecMode mode) {
  const auto pts = grid2(2, max_m, 2, max_alpha);
  return map_indexed(pts.size(), mode, [&](std::size_t i) {
    return check_exchange(pts[i][0], pts[i][1], c);
  });
}

std::vector<IdentityReport> mersenne(const CoeffTriangle& c, unsigned max_m, ExecMode mode) {
  auto rows = map_indexed(max_m - 1, mode, [&](std::size_t i) {
    const unsigned m = static_cast<unsigned>(i) + 2;
    return std::array<IdentityReport, 2>{
        make_report("mersenne", {m}, weighted_power_sum(m, 2, c) - Int(m),
                    Rat(int_pow(Int(2), m) - 2)),
        make_report("ternary", {m}, weighted_power_sum(m, 3, c) - Int(m),
                    Rat(int_pow(Int(3), m) - 3))};
  });
  std::vector<IdentityReport> out;
  for (auto& pair : rows)
    for (auto& r : pair) out.push_back(std::move(r));
  return out;
}

std::vector<IdentityReport> power_expansion(const CoeffTriangle& a, const CoeffTriangle& c,
                                            unsigned max_m, unsigned max_n, ExecMode mode) {
  const auto pts = grid2(2, max_m, 2, max_n);
  return map_indexed(pts.size(), mode, [&](std::size_t i) {
    return check_power_expansion(pts[i][0], pts[i][1], a, c);
  });
}

std::vector<IdentityReport> pythagoras(const CoeffTriangle& a, unsigned max_c, ExecMode mode) {
  const auto triples = enumerate_pythagorean(max_c);
  auto pairs = map_indexed(triples.size(), mode, [&](std::size_t i) {
    const Triple& t = triples[i];
    return std::array<IdentityReport, 2>{
        make_report("pythagoras", {t.a, t.b, t.c}, pythagoras_residual(t, a), Rat(0)),
        make_report("pythagoras-mersenne", {t.a, t.b, t.c},
                    mersenne_footnote_residual(t, a), Rat(0))};
  });
  std::vector<IdentityReport> out;
  for (auto& pair : pairs)
    for (auto& r : pair) out.push_back(std::move(r));
  return out;
}

std::vector<IdentityReport> pythagoras_grid(const CoeffTriangle& a, unsigned lo, unsigned hi,
                                            ExecMode mode) {
  if (lo < 2) throw std::invalid_argument("pythagoras_grid: lo must be >= 2");
  std::vector<Triple> pts;
  for (unsigned x = lo; x <= hi; ++x)
    for (unsigned y = lo; y <= hi; ++y)
      for (unsigned z = lo; z <= hi; ++z) pts.push_back({x, y, z});
  auto pairs = map_indexed(pts.size(), mode, [&](std::size_t i) {
    const Triple& t = pts[i];
    const Rat gap(Int(t.a) * t.a + Int(t.b) * t.b - Int(t.c) * t.c);
    return std::array<IdentityReport, 2>{
        make_report("pythagoras-residual", {t.a, t.b, t.c},
                    pythagoras_residual(t, a), gap),
        make_report("pythagoras-mersenne-residual", {t.a, t.b, t.c},
                    mersenne_footnote_residual(t, a), gap / 2)};
  });
  std::vector<IdentityReport> out;
  for (auto& pair : pairs)
    for (auto& r : pair) out.push_back(std::move(r));
  return out;
}

std::vector<IdentityReport> hyper_sums(const CoeffTriangle& c, unsigned max_a, unsigned max_m,
                                       unsigned max_n, ExecMode mode) {
  std::vector<HyperSumQuery> pts;
  for (unsigned a = 0; a <= max_a; ++a)
    for (unsigned m = 2; m <= max_m; ++m)
      for (unsigned n = 1; n <= max_n; ++n) pts.push_back({a, m, n});
  return map_indexed(pts.size(), mode, [&](std::size_t i) {
    const HyperSumQuery& q = pts[i];
    return make_report("hyper-sum", {q.a, q.m, q.n}, Rat(hyper_sum_brute(q)),
                       Rat(hyper_sum_expansion(q, c)));
  });
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "row-sums",  "weighted-sums", "orthogonality",   "rising-factorial",
      "exchange",  "mersenne",      "power-expansion", "pythagoras"};
  return names;
}

TableSet build_tables(const std::vector<std::string>& families, const Bounds& b,
                      ExecMode mode) {
  auto wants = [&](const std::string& f) {
    return std::find(families.begin(), families.end(), f) != families.end();
  };
  unsigned a_size = 2, c_size = 2;
  if (wants("row-sums") || wants("weighted-sums") || wants("orthogonality")) {
    a_size = std::max(a_size, b.max_m);
    c_size = std::max(c_size, b.max_m);
  }
  if (wants("rising-factorial") || wants("mersenne")) c_size = std::max(c_size, b.max_m);
  if (wants("exchange")) c_size = std::max({c_size, b.max_m, b.max_alpha});
  if (wants("power-expansion")) {
    c_size = std::max(c_size, b.max_m);
    a_size = std::max(a_size, b.max_n);
  }
  if (wants("pythagoras")) a_size = std::max(a_size, b.max_c);
  return TableSet{CoeffTriangle::build(CoeffKind::a, a_size, BuildRoute::closed_form, mode),
                  CoeffTriangle::build(CoeffKind::c, c_size, BuildRoute::explicit_formula, mode)};
}

namespace {

// bounds below an identity's minimal domain are caller errors, not empty sweeps
void check_bounds(const std::string& family, const Bounds& b) {
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(family + ": " + what);
  };
  need(b.max_m >= 2, "max_m must be >= 2");
  if (family == "rising-factorial" || family == "power-expansion")
    need(b.max_n >= 2, "max_n must be >= 2");
  if (family == "exchange") need(b.max_alpha >= 2, "max_alpha must be >= 2");
  if (family == "pythagoras") need(b.max_c >= 5, "max_c must be >= 5");
}

}  // namespace

std::vector<FamilyRun> run_families(const std::vector<std::string>& families,
                                    const TableSet& tables, const Bounds& b, ExecMode mode) {
  for (const auto& name : families) check_bounds(name, b);
  std::vector<FamilyRun> out;
  for (const auto& name : family_names()) {
    if (std::find(families.begin(), families.end(), name) == families.end()) continue;
    FamilyRun run;
    run.family = name;
    if (name == "row-sums")
      run.reports = row_sums(tables.a, tables.c, b.max_m, mode);
    else if (name == "weighted-sums")
      run.reports = weighted_sums(tables.a, tables.c, b.max_m, mode);
    else if (name == "orthogonality")
      run.reports = orthogonality(tables.a, tables.c, b.max_m, mode);
    else if (name == "rising-factorial")
      run.reports = rising_factorial_sweep(tables.c, b.max_m, b.max_n, mode);
    else if (name == "exchange")
      run.reports = exchange(tables.c, b.max_m, b.max_alpha, mode);
    else if (name == "mersenne")
      run.reports = mersenne(tables.c, b.max_m, mode);
    else if (name == "power-expansion")
      run.reports = power_expansion(tables.a, tables.c, b.max_m, b.max_n, mode);
    else if (name == "pythagoras") {
      run.reports = pythagoras(tables.a, b.max_c, mode);
      run.note = std::to_string(run.reports.size() / 2) + " triples";
    }
    out.push_back(std::move(run));
  }
  return out;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.pass; });
}

bool all_pass(const std::vector<FamilyRun>& runs) {
  return std::all_of(runs.begin(), runs.end(),
                     [](const FamilyRun& f) { return all_pass(f.reports); });
}

}  // namespace hypsum::verify
