#include "hypsum/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hypsum/coefficients.hpp"
#include "hypsum/combinatorics.hpp"
#include "hypsum/psi.hpp"

namespace hypsum {

IdentityReport make_report(std::string identity, std::vector<unsigned long> point,
                           Rat lhs, Rat rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.point = std::move(point);
  r.pass = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

bool is_pythagorean(const Triple& t) {
  return Int(t.a) * t.a + Int(t.b) * t.b == Int(t.c) * t.c;
}

namespace {
void require_c_table(const CoeffTriangle& t, unsigned m, const char* who) {
  if (t.kind() != CoeffKind::c)
    throw std::invalid_argument(std::string(who) + ": table must have kind c");
  if (m < 2) throw std::invalid_argument(std::string(who) + ": m must be >= 2");
  if (m > t.max_m()) throw std::invalid_argument(std::string(who) + ": table too small");
}

void require_a_table(const CoeffTriangle& t, unsigned m, const char* who) {
  if (t.kind() != CoeffKind::a)
    throw std::invalid_argument(std::string(who) + ": table must have kind a");
  if (m < 2) throw std::invalid_argument(std::string(who) + ": m must be >= 2");
  if (m > t.max_m()) throw std::invalid_argument(std::string(who) + ": table too small");
}
}  // namespace

Rat weighted_power_sum(unsigned m, unsigned alpha, const CoeffTriangle& c_table) {
  require_c_table(c_table, m, "weighted_power_sum");
  Rat sum(0);
  for (unsigned k = 2; k <= m; ++k) sum += c_table.at(m, k) * int_pow(Int(k), alpha);
  require_integer(sum, "weighted_power_sum");
  return sum;
}

Rat weighted_psi_sum(unsigned m, unsigned alpha, const CoeffTriangle& a_table) {
  require_a_table(a_table, m, "weighted_psi_sum");
  Rat sum(0);
  for (unsigned k = 2; k <= m; ++k) sum += a_table.at(m, k) * psi(alpha, k);
  return sum;
}

std::vector<IdentityReport> check_weighted_sums(unsigned m_max, const CoeffTriangle& a_table,
                                                const CoeffTriangle& c_table) {
  if (m_max < 2) throw std::invalid_argument("check_weighted_sums: m_max must be >= 2");
  std::vector<IdentityReport> out;
  out.reserve(2 * (m_max - 1));
  for (unsigned m = 2; m <= m_max; ++m) {
    out.push_back(make_report("weighted-sum-c", {m},
                              weighted_power_sum(m, 1, c_table), Rat(Int(m))));
    out.push_back(make_report("weighted-sum-a", {m},
                              weighted_psi_sum(m, 1, a_table), Rat(Int(m))));
  }
  return out;
}

IdentityReport check_rising_factorial(unsigned m, unsigned n, const CoeffTriangle& c_table) {
  require_c_table(c_table, m, "check_rising_factorial");
  if (n < 2) throw std::invalid_argument("check_rising_factorial: n must be >= 2");
  Rat lhs(0);
  for (unsigned k = 2; k <= m; ++k)
    lhs += c_table.at(m, k) * make_rat(rising_factorial(n, k - 1), factorial(k - 2));
  const Rat rhs = make_rat(int_pow(Int(n), m) - Int(n), Int(n) - 1);
  return make_report("rising-factorial-sum", {m, n}, lhs, rhs);
}

IdentityReport check_binomial_weighted_sum(unsigned m, unsigned n,
                                           const CoeffTriangle& c_table) {
  require_c_table(c_table, m, "check_binomial_weighted_sum");
  if (n < 2) throw std::invalid_argument("check_binomial_weighted_sum: n must be >= 2");
  Rat lhs(0);
  for (unsigned k = 2; k <= m; ++k)
    lhs += c_table.at(m, k) * binomial_sym(k - 1, n - 1);
  const Rat rhs = make_rat(int_pow(Int(n), m - 1) - Int(n), Int(n) - 1);
  return make_report("binomial-weighted-sum", {m, n}, lhs, rhs);
}

IdentityReport check_exchange(unsigned m, unsigned alpha, const CoeffTriangle& c_table) {
  if (m < 2 || alpha < 2)
    throw std::invalid_argument("check_exchange: both indices must be >= 2");
  const Rat lhs = weighted_power_sum(m, alpha, c_table) - Int(m);
  const Rat rhs = weighted_power_sum(alpha, m, c_table) - Int(alpha);
  return make_report("exchange", {m, alpha}, lhs, rhs);
}

std::vector<IdentityReport> check_mersenne_family(unsigned m_max,
                                                  const CoeffTriangle& c_table) {
  if (m_max < 2) throw std::invalid_argument("check_mersenne_family: m_max must be >= 2");
  std::vector<IdentityReport> out;
  out.reserve(2 * (m_max - 1));
  for (unsigned m = 2; m <= m_max; ++m) {
    out.push_back(make_report("mersenne", {m},
                              weighted_power_sum(m, 2, c_table) - Int(m),
                              Rat(int_pow(Int(2), m) - 2)));
    out.push_back(make_report("ternary", {m},
                              weighted_power_sum(m, 3, c_table) - Int(m),
                              Rat(int_pow(Int(3), m) - 3)));
  }
  return out;
}

IdentityReport check_power_expansion(unsigned m, unsigned n, const CoeffTriangle& a_table,
                                     const CoeffTriangle& c_table) {
  require_c_table(c_table, m, "check_power_expansion");
  require_a_table(a_table, n, "check_power_expansion");
  const Rat lhs(int_pow(Int(n), m) - Int(n) + Int(m));
  Rat rhs(0);
  for (unsigned l = 2; l <= n; ++l)
    rhs += a_table.at(n, l) * weighted_power_sum(m, l, c_table);
  return make_report("power-expansion", {m, n}, lhs, rhs);
}

Rat pythagoras_residual(const Triple& t, const CoeffTriangle& a_table) {
  if (t.a < 2 || t.b < 2 || t.c < 2)
    throw std::invalid_argument("pythagoras_residual: members must be >= 2");
  const unsigned top = std::max({t.a, t.b, t.c});
  require_a_table(a_table, top, "pythagoras_residual");
  Rat sum(0);
  for (unsigned l = 2; l <= top; ++l) {
    const Rat coeff = a_table.at_or_zero(t.a, l) + a_table.at_or_zero(t.b, l) -
                      a_table.at_or_zero(t.c, l);
    sum += Rat(int_pow(Int(2), l)) * coeff;
  }
  return sum - Rat(Int(2) + Int(t.c) - Int(t.a) - Int(t.b));
}

Rat mersenne_footnote_residual(const Triple& t, const CoeffTriangle& a_table) {
  if (t.a < 2 || t.b < 2 || t.c < 2)
    throw std::invalid_argument("mersenne_footnote_residual: members must be >= 2");
  const unsigned top = std::max({t.a, t.b, t.c});
  require_a_table(a_table, top, "mersenne_footnote_residual");
  Rat sum(0);
  for (unsigned l = 2; l <= top; ++l) {
    const Rat coeff = a_table.at_or_zero(t.a, l) + a_table.at_or_zero(t.b, l) -
                      a_table.at_or_zero(t.c, l);
    sum += Rat(int_pow(Int(2), l - 1) - 1) * coeff;
  }
  return sum - make_rat(Int(t.c) - Int(t.a) - Int(t.b), Int(2));
}

std::vector<Triple> enumerate_pythagorean(unsigned c_max) {
  std::vector<Triple> out;
  for (unsigned c = 5; c <= c_max; ++c)
    for (unsigned b = 4; b < c; ++b)
      for (unsigned a = 3; a <= b; ++a)
        if (Int(a) * a + Int(b) * b == Int(c) * c) out.push_back({a, b, c});
  return out;
}

}  // namespace hypsum
