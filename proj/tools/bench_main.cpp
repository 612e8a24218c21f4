// Times the OpenMP sweep/build kernels against their serial reference and
// checks that both modes produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypsum/coefficients.hpp"
#include "hypsum/verify.hpp"

namespace {

using namespace hypsum;
using Clock = std::chrono::steady_clock;

template <typename F>
double seconds(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Workload {
  std::string name;
  std::function<bool(ExecMode, double&)> run;  // returns match-vs-serial later
};

int run_all(unsigned scale) {
  const unsigned a_rows = 100 * scale;
  const unsigned c_rows = 90 * scale;
  const unsigned solve_rows = 32 + 4 * scale;
  const unsigned ortho_rows = 40 * scale;
  const unsigned grid_hi = 16 + 4 * scale;

  const auto a_ref = CoeffTriangle::build(CoeffKind::a, a_rows, BuildRoute::closed_form);
  const auto c_ref = CoeffTriangle::build(CoeffKind::c, ortho_rows, BuildRoute::explicit_formula);

  struct Row {
    std::string name;
    double serial = 0, parallel = 0;
    bool match = false;
  };
  std::vector<Row> rows;

  auto bench = [&](const std::string& name, auto&& make) {
    Row row;
    row.name = name;
    std::optional<decltype(make(ExecMode::serial))> serial_out, parallel_out;
    row.serial = seconds([&] { serial_out.emplace(make(ExecMode::serial)); });
    row.parallel = seconds([&] { parallel_out.emplace(make(ExecMode::parallel)); });
    row.match = *serial_out == *parallel_out;
    rows.push_back(row);
  };

  bench("build a closed-form m=" + std::to_string(a_rows), [&](ExecMode mode) {
    return CoeffTriangle::build(CoeffKind::a, a_rows, BuildRoute::closed_form, mode);
  });
  bench("build c explicit m=" + std::to_string(c_rows), [&](ExecMode mode) {
    return CoeffTriangle::build(CoeffKind::c, c_rows, BuildRoute::explicit_formula, mode);
  });
  bench("build c solve m=" + std::to_string(solve_rows), [&](ExecMode mode) {
    return CoeffTriangle::build(CoeffKind::c, solve_rows, BuildRoute::solve, mode);
  });
  bench("orthogonality sweep m=" + std::to_string(ortho_rows), [&](ExecMode mode) {
    return verify::orthogonality(a_ref, c_ref, ortho_rows, mode);
  });
  bench("pythagoras grid [2," + std::to_string(grid_hi) + "]^3", [&](ExecMode mode) {
    return verify::pythagoras_grid(a_ref, 2, grid_hi, mode);
  });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%-36s %10s %10s %8s %6s\n", "workload", "serial", "parallel", "speedup",
              "match");
  bool all_match = true;
  for (const auto& r : rows) {
    std::printf("%-36s %9.3fs %9.3fs %7.2fx %6s\n", r.name.c_str(), r.serial, r.parallel,
                r.parallel > 0 ? r.serial / r.parallel : 0.0, r.match ? "yes" : "NO");
    all_match = all_match && r.match;
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned scale = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--scale" && i + 1 < argc) {
      scale = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--scale N]\n", argv[0]);
      return 2;
    }
  }
  return run_all(scale == 0 ? 1 : scale);
}
