#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "zardec/bounds.hpp"

using namespace zardec;

namespace {

IntersectionForm form(std::initializer_list<std::initializer_list<Rational>> rows) {
  return IntersectionForm(RationalMatrix(rows));
}

DivisorVec divisor(std::initializer_list<Rational> xs) { return DivisorVec(std::vector<Rational>(xs)); }

Integer value(const GuardedInteger& g) {
  REQUIRE(std::holds_alternative<Integer>(g));
  return std::get<Integer>(g);
}

}  // namespace

TEST_CASE("denominator_bound") {
  CHECK(value(denominator_bound(8, 2)) == 40320);
  CHECK(value(denominator_bound(8, 1)) == 1);
  CHECK(value(denominator_bound(1, 5)) == 1);
  CHECK(value(denominator_bound(3, 3)) == oracle::factorial(9));

  const GuardedInteger big = denominator_bound(8, 21);
  REQUIRE(std::holds_alternative<FactorialTerm>(big));
  const auto& term = std::get<FactorialTerm>(big);
  CHECK(term.factorial_of == oracle::power_by_squaring(8, 20));
  CHECK(term.factorial_of == Integer("1152921504606846976"));
  CHECK(term.times == 1);
  CHECK(term.display() == "(8^20)!");
  CHECK(display(big) == "(8^20)!");
  CHECK(!is_materialized(big));

  CHECK(!is_materialized(denominator_bound(8, 3, 63)));
  CHECK(is_materialized(denominator_bound(8, 3, 64)));
  CHECK_THROWS_AS(denominator_bound(8, 0), DomainError);
  CHECK_THROWS_AS(denominator_bound(0, 2), DomainError);
}

TEST_CASE("reverse_bn_bound") {
  CHECK(value(reverse_bn_bound(2, 2)) == 8);
  CHECK(value(reverse_bn_bound(1, 7)) == 7);
  CHECK(value(reverse_bn_bound(3, 1)) == 18);
  const GuardedInteger g = reverse_bn_bound(200, 3, 100);
  REQUIRE(std::holds_alternative<FactorialTerm>(g));
  CHECK(std::get<FactorialTerm>(g).times == 600);
  CHECK(std::get<FactorialTerm>(g).factorial_of == 200);
}

TEST_CASE("birationality_bound") {
  CHECK(value(birationality_bound(2, 2, 2)) == 846720);
  CHECK(value(birationality_bound(1, 1, 1)) == 10);
  const GuardedInteger g = birationality_bound(2, 2, 21);
  REQUIRE(std::holds_alternative<FactorialTerm>(g));
  CHECK(std::get<FactorialTerm>(g).times == 21);
  CHECK(std::get<FactorialTerm>(g).display() == "21 * (8^20)!");
}

TEST_CASE("chow_degree_bound") {
  auto rational = [](const GuardedRational& g) {
    REQUIRE(std::holds_alternative<Rational>(g));
    return std::get<Rational>(g);
  };
  CHECK(rational(chow_degree_bound(1, 1, Integer(10))) == 100);
  CHECK(rational(chow_degree_bound(2, 1, Integer(846720))) == Rational(oracle::power_by_squaring(846720, 4)));
  CHECK(rational(chow_degree_bound(2, 1, Integer(846720))) == Rational(Integer("513995447802066370560000")));
  CHECK(rational(chow_degree_bound(1, make_rational(1, 2), Integer(2))) == 2);

  const GuardedRational sym = chow_degree_bound(2, make_rational(3, 2), birationality_bound(2, 2, 21));
  REQUIRE(std::holds_alternative<FactorialPower>(sym));
  const auto& p = std::get<FactorialPower>(sym);
  CHECK(p.exponent == 4);
  CHECK(p.scale == make_rational(3, 2));
  CHECK(p.base.times == 21);
}

TEST_CASE("factorial guard from the environment") {
  ::unsetenv("BBF_FACTORIAL_GUARD");
  CHECK(factorial_guard_from_env() == kDefaultFactorialGuard);
  ::setenv("BBF_FACTORIAL_GUARD", "50", 1);
  CHECK(factorial_guard_from_env() == 50);
  ::setenv("BBF_FACTORIAL_GUARD", "junk", 1);
  CHECK(factorial_guard_from_env() == kDefaultFactorialGuard);
  ::unsetenv("BBF_FACTORIAL_GUARD");
}

TEST_CASE("full_report") {
  const FullReport k3 = full_report(preset(DeformationType::K3n, 2), 2, 1);
  CHECK(k3.preset == "K3^[2]");
  CHECK(k3.h11 == 21);
  CHECK(k3.at_rho.negativity_bound == 8);
  CHECK(value(k3.at_rho.denominator_bound) == 40320);
  CHECK(value(k3.at_rho.birationality_m0) == 846720);
  REQUIRE(k3.at_rho.reverse_bn_bound.has_value());
  CHECK(value(*k3.at_rho.reverse_bn_bound) == oracle::factorial(40320) * 40320 * 2);
  CHECK(k3.uniform.rho == 21);
  CHECK(!is_materialized(k3.uniform.denominator_bound));
  CHECK(!k3.uniform.reverse_bn_bound.has_value());

  const FullReport og10 = full_report(preset(DeformationType::OG10), 2, 1);
  CHECK(og10.at_rho.negativity_bound == 12);
  CHECK(og10.published_max_negative_square == 6);
  CHECK(value(og10.at_rho.denominator_bound) == 479001600);

  const FullReport og6 = full_report(preset(DeformationType::OG6), 2, 1);
  CHECK(og6.at_rho.negativity_bound == 16);
  CHECK(og6.at_rho.refined_negativity_bound == 8);

  for (const auto& p : {preset(DeformationType::K3n, 3), preset(DeformationType::KummerN, 2),
                        preset(DeformationType::OG6), preset(DeformationType::OG10)}) {
    const FullReport r = full_report(p, 1, 1);
    const long n = p.half_dimension;
    CHECK(value(r.at_rho.denominator_bound) == 1);
    CHECK(value(r.at_rho.birationality_m0) == (n + 1) * (2 * n + 3));
  }

  CHECK_THROWS_AS(full_report(preset(DeformationType::K3n, 2), 0, 1), DomainError);
  CHECK_THROWS_AS(full_report(preset(DeformationType::K3n, 2), 22, 1), DomainError);
  CHECK_THROWS_AS(full_report(preset(DeformationType::K3n, 2), 2, 0), DomainError);
}

TEST_CASE("cramer_analysis") {
  const CramerAnalysis a = cramer_analysis(form({{2, 1}, {1, -2}}), divisor({1, 1}), {1});
  CHECK(a.coefficients == std::vector<Rational>{make_rational(1, 2)});
  CHECK(a.column_determinants == std::vector<Integer>{-1});
  CHECK(a.gram_determinant == -2);
  CHECK(a.common_denominator == 2);

  const CramerAnalysis b = cramer_analysis(form({{-2}}), divisor({1}), {0});
  CHECK(b.coefficients == std::vector<Rational>{1});
  CHECK(b.common_denominator == 1);

  // A2 chain inside a three-component form
  const IntersectionForm f = form({{-2, 1, 0}, {1, -2, 1}, {0, 1, 1}});
  const CramerAnalysis c = cramer_analysis(f, divisor({1, 1, 1}), {0, 1});
  CHECK(c.gram_determinant == 3);
  CHECK(c.coefficients == std::vector<Rational>{make_rational(2, 3), make_rational(1, 3)});
  for (const auto& x : c.coefficients) CHECK(mpz_divisible_p(c.gram_determinant.get_mpz_t(), x.get_den_mpz_t()));

  CHECK_THROWS(cramer_analysis(f, divisor({1, 1, 1}), {0}));
  CHECK_THROWS_AS(cramer_analysis(form({{2, 1}, {1, -2}}), divisor({1, make_rational(1, 2)}), {1}), DomainError);
}

TEST_CASE("det_trace_bound_check") {
  CHECK(det_trace_bound_check(form({{-2}}), {0}, 2));
  CHECK(det_trace_bound_check(form({{-2, 1}, {1, -2}}), {0, 1}, 2));
  CHECK(det_trace_bound_check(form({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}), {0, 1, 2}, 2));
  CHECK_THROWS_AS(det_trace_bound_check(form({{-2}}), {0}, 1), DomainError);
  CHECK_THROWS_AS(det_trace_bound_check(form({{-2}}), {0}, 0), DomainError);
  CHECK_THROWS_AS(det_trace_bound_check(form({{-1, 2}, {2, -1}}), {0, 1}, 2), DomainError);
}

TEST_CASE("property: birationality identity over the grid") {
  for (unsigned long n = 1; n <= 5; ++n)
    for (long card = 1; card <= 6; ++card)
      for (unsigned long rho = 1; rho <= 4; ++rho) {
        const Integer lhs = value(birationality_bound(n, card, rho));
        const Integer inner = value(denominator_bound(4 * card, rho));
        CHECK(lhs == Integer((n + 1) * (2 * n + 3)) * inner);
        CHECK(inner == oracle::factorial(oracle::power_by_squaring(4 * card, rho - 1).get_ui()));
      }
}

TEST_CASE("property: bounds are monotone") {
  for (long b = 1; b <= 6; ++b)
    for (unsigned long rho = 1; rho <= 3; ++rho) {
      CHECK(value(denominator_bound(b, rho)) <= value(denominator_bound(b + 1, rho)));
      CHECK(value(denominator_bound(b, rho)) <= value(denominator_bound(b, rho + 1)));
    }
  for (long d = 1; d <= 8; ++d)
    for (long c = 1; c <= 4; ++c) {
      CHECK(value(reverse_bn_bound(d, c)) < value(reverse_bn_bound(d + 1, c)));
      CHECK(value(reverse_bn_bound(d, c)) < value(reverse_bn_bound(d, c + 1)));
    }
}
