#include <doctest.h>

#include "hypsum/verify.hpp"

using namespace hypsum;

TEST_SUITE("verify") {

TEST_CASE("map_indexed keeps index order in both modes") {
  auto square = [](std::size_t i) { return i * i; };
  const auto serial = map_indexed(1000, ExecMode::serial, square);
  const auto parallel = map_indexed(1000, ExecMode::parallel, square);
  CHECK(serial == parallel);
  CHECK(serial[31] == 961);
  CHECK(map_indexed(0, ExecMode::parallel, square).empty());
}

TEST_CASE("map_indexed propagates worker exceptions") {
  auto throwing = [](std::size_t i) -> int {
    if (i == 57) throw std::invalid_argument("boom");
    return static_cast<int>(i);
  };
  CHECK_THROWS_AS(map_indexed(100, ExecMode::parallel, throwing), std::invalid_argument);
  CHECK_THROWS_AS(map_indexed(100, ExecMode::serial, throwing), std::invalid_argument);
}

TEST_CASE("every family produces identical reports in both modes") {
  const verify::Bounds b{.max_m = 12, .max_alpha = 8, .max_n = 8, .max_c = 30};
  const auto tables = verify::build_tables(verify::family_names(), b, ExecMode::parallel);
  const auto runs_s = verify::run_families(verify::family_names(), tables, b, ExecMode::serial);
  const auto runs_p =
      verify::run_families(verify::family_names(), tables, b, ExecMode::parallel);
  REQUIRE(runs_s.size() == runs_p.size());
  for (std::size_t i = 0; i < runs_s.size(); ++i) {
    CHECK(runs_s[i].family == runs_p[i].family);
    CHECK(runs_s[i].reports == runs_p[i].reports);
    CHECK(verify::all_pass(runs_s[i].reports));
  }
}

TEST_CASE("grid sweep covers non-pythagorean points too") {
  const auto a = CoeffTriangle::build(CoeffKind::a, 8, BuildRoute::closed_form);
  const auto grid_s = verify::pythagoras_grid(a, 2, 8, ExecMode::serial);
  const auto grid_p = verify::pythagoras_grid(a, 2, 8, ExecMode::parallel);
  CHECK(grid_s == grid_p);
  CHECK(grid_s.size() == 2 * 7 * 7 * 7);
  CHECK(verify::all_pass(grid_s));
}

TEST_CASE("hyper-sum sweep pits the two routes against each other") {
  const auto c = CoeffTriangle::build(CoeffKind::c, 8, BuildRoute::explicit_formula);
  const auto reports = verify::hyper_sums(c, 3, 8, 12, ExecMode::parallel);
  CHECK(reports.size() == 4 * 7 * 12);
  CHECK(verify::all_pass(reports));
  CHECK(reports == verify::hyper_sums(c, 3, 8, 12, ExecMode::serial));
}

TEST_CASE("default bounds pass across all families") {
  const verify::Bounds b;
  const auto tables = verify::build_tables(verify::family_names(), b, ExecMode::parallel);
  const auto runs = verify::run_families(verify::family_names(), tables, b, ExecMode::parallel);
  REQUIRE(runs.size() == verify::family_names().size());
  CHECK(verify::all_pass(runs));
  std::size_t total = 0;
  for (const auto& r : runs) total += r.reports.size();
  CHECK(total == 1028);
}

TEST_CASE("corrupted tables surface as failed reports, not silence") {
  const verify::Bounds b{.max_m = 8, .max_alpha = 4, .max_n = 4, .max_c = 10};
  auto tables = verify::build_tables({"row-sums", "orthogonality"}, b, ExecMode::serial);
  tables.c.corrupt_entry(5, 3, Rat(1));
  const auto runs =
      verify::run_families({"row-sums", "orthogonality"}, tables, b, ExecMode::serial);
  CHECK_FALSE(verify::all_pass(runs));
  bool found = false;
  for (const auto& run : runs)
    for (const auto& r : run.reports)
      if (!r.pass && r.identity == "row-sum-c" && r.point == std::vector<unsigned long>{5}) {
        found = true;
        CHECK(r.lhs == 2);
        CHECK(r.rhs == 1);
      }
  CHECK(found);
}

}  // TEST_SUITE
