#include <doctest.h>

#include "hypsum/coefficients.hpp"
#include "hypsum/combinatorics.hpp"
#include "hypsum/psi.hpp"

using namespace hypsum;

TEST_SUITE("psi") {

TEST_CASE("psi at n = 1 and the identity-map extensions") {
  for (unsigned m = 2; m <= 50; ++m) CHECK(psi(m, 1) == 1);
  for (unsigned n = 1; n <= 50; ++n) {
    CHECK(psi(0, n) == Int(n));
    CHECK(psi(1, n) == Int(n));
  }
}

TEST_CASE("psi point values") {
  CHECK(psi(2, 3) == 9);  // psi_2 is the square
  for (unsigned n = 1; n <= 20; ++n) CHECK(psi(2, n) == Int(n) * n);
  CHECK(psi(4, 3) == 63);
  CHECK(psi(3, 2) == 8);
  CHECK(psi(4, 2) == 14);
  CHECK(psi(5, 2) == 22);
}

TEST_CASE("psi rejects n = 0") {
  CHECK_THROWS_AS(psi(3, 0), std::invalid_argument);
}

TEST_CASE("psi_general specializes to psi at a = 0") {
  for (unsigned m = 2; m <= 12; ++m)
    for (unsigned n = 1; n <= 12; ++n) CHECK(psi_general(0, m, n) == Rat(psi(m, n)));
}

TEST_CASE("psi_general point values") {
  CHECK(psi_general(1, 2, 4) == 30);
  // cross-check: psi_2^(1)(n) is the square pyramidal sum
  for (unsigned n = 1; n <= 12; ++n) {
    Int brute = 0;
    for (unsigned v = 1; v <= n; ++v) brute += Int(v) * v;
    CHECK(psi_general(1, 2, n) == Rat(brute));
  }
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned m = 2; m <= 10; ++m) CHECK(psi_general(a, m, 1) == 1);
}

TEST_CASE("psi_general is integral on the tested lattice") {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned m = 2; m <= 12; ++m)
      for (unsigned n = 1; n <= 12; ++n) CHECK(is_integer(psi_general(a, m, n)));
}

TEST_CASE("psi_general rejects m < 2 and n = 0") {
  CHECK_THROWS_AS(psi_general(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(psi_general(1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(psi_general(1, 2, 0), std::invalid_argument);
}

TEST_CASE("psi_via_a_table reproduces psi exactly") {
  const auto a_table = CoeffTriangle::build(CoeffKind::a, 20, BuildRoute::closed_form);
  CHECK(psi_via_a_table(2, 5, a_table) == 25);
  CHECK(psi_via_a_table(4, 2, a_table) == 14);
  CHECK(psi_via_a_table(5, 1, a_table) == 1);
  for (unsigned m = 2; m <= 20; ++m)
    for (unsigned n = 1; n <= 20; ++n)
      CHECK(psi_via_a_table(m, n, a_table) == psi(m, n));
}

TEST_CASE("psi_via_a_table rejects undersized or mismatched tables") {
  const auto a_table = CoeffTriangle::build(CoeffKind::a, 4, BuildRoute::closed_form);
  CHECK_THROWS_AS(psi_via_a_table(5, 2, a_table), std::invalid_argument);
  const auto c_table = CoeffTriangle::build(CoeffKind::c, 6, BuildRoute::explicit_formula);
  CHECK_THROWS_AS(psi_via_a_table(3, 2, c_table), std::invalid_argument);
}

TEST_CASE("exchanging the index and argument shifts psi by n - m") {
  CHECK(symmetry_residual(2, 3) == 0);
  CHECK(psi(2, 3) - 3 == psi(3, 2) - 2);
  CHECK(symmetry_residual(5, 7) == 0);
  // direct evaluation of both orientations
  const Int lhs = Int(7) + Int(4) * Int(6) * binomial_sym(6, 4);
  const Int rhs = Int(5) + Int(6) * Int(4) * binomial_sym(4, 6);
  CHECK(lhs - 7 == rhs - 5);
  for (unsigned m = 0; m <= 30; ++m)
    for (unsigned n = 1; n <= 30; ++n) CHECK(symmetry_residual(m, n) == 0);
}

}  // TEST_SUITE
