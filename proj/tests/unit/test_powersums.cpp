#include <doctest.h>

#include "hypsum/coefficients.hpp"
#include "hypsum/powersums.hpp"
#include "oracles.hpp"

using namespace hypsum;

TEST_SUITE("powersums") {

TEST_CASE("brute route point values") {
  CHECK(hyper_sum_brute({0, 3, 4}) == 64);
  CHECK(hyper_sum_brute({1, 2, 4}) == 30);  // 1 + 4 + 9 + 16
  CHECK(hyper_sum_brute({2, 2, 3}) == 20);  // 1 + (1+4) + (1+4+9)
  CHECK(hyper_sum_brute({3, 2, 1}) == 1);
}

TEST_CASE("brute route equals the literal nested loops") {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned m = 2; m <= 6; ++m)
      for (unsigned n = 1; n <= 10; ++n)
        CHECK(hyper_sum_brute({a, m, n}) == testing::nested_sum_literal(a, m, n));
}

TEST_CASE("expansion route point values") {
  const auto c_table = CoeffTriangle::build(CoeffKind::c, 8, BuildRoute::explicit_formula);
  CHECK(hyper_sum_expansion({1, 2, 4}, c_table) == 30);
  CHECK(hyper_sum_expansion({0, 5, 2}, c_table) == 32);
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned m = 2; m <= 8; ++m) CHECK(hyper_sum_expansion({a, m, 1}, c_table) == 1);
}

TEST_CASE("the two routes agree on the whole lattice") {
  const auto c_table = CoeffTriangle::build(CoeffKind::c, 8, BuildRoute::explicit_formula);
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned m = 2; m <= 8; ++m)
      for (unsigned n = 1; n <= 12; ++n)
        CHECK(hyper_sum_brute({a, m, n}) == hyper_sum_expansion({a, m, n}, c_table));
}

TEST_CASE("hyper-sums increase strictly in n") {
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned m = 2; m <= 4; ++m)
      for (unsigned n = 1; n <= 15; ++n)
        CHECK(hyper_sum_brute({a, m, n + 1}) > hyper_sum_brute({a, m, n}));
}

TEST_CASE("the classical square-sum closed form holds") {
  for (unsigned n = 1; n <= 50; ++n) {
    Int expected = Int(n) * (n + 1) * (2 * n + 1);
    mpz_divexact_ui(expected.get_mpz_t(), expected.get_mpz_t(), 6);
    CHECK(hyper_sum_brute({1, 2, n}) == expected);
  }
}

TEST_CASE("invalid queries and undersized tables are rejected") {
  CHECK_THROWS_AS(hyper_sum_brute({0, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(hyper_sum_brute({0, 2, 0}), std::invalid_argument);
  const auto c_table = CoeffTriangle::build(CoeffKind::c, 4, BuildRoute::explicit_formula);
  CHECK_THROWS_AS(hyper_sum_expansion({1, 5, 3}, c_table), std::invalid_argument);
  const auto a_table = CoeffTriangle::build(CoeffKind::a, 6, BuildRoute::closed_form);
  CHECK_THROWS_AS(hyper_sum_expansion({1, 3, 3}, a_table), std::invalid_argument);
}

}  // TEST_SUITE
