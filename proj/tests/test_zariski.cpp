#include <algorithm>

#include "doctest.h"
#include "zardec/properties.hpp"
#include "zardec/zariski.hpp"

using namespace zardec;

namespace {

IntersectionForm form(std::initializer_list<std::initializer_list<Rational>> rows) {
  return IntersectionForm(RationalMatrix(rows));
}

DivisorVec divisor(std::initializer_list<Rational> xs) { return DivisorVec(std::vector<Rational>(xs)); }

Rational q(long p, long d) { return make_rational(p, d); }

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace

TEST_CASE("intersection product axiom") {
  CHECK(validate_intersection_product(form({{-2, 1}, {1, -2}})).empty());
  const auto v = validate_intersection_product(form({{2, -1}, {-1, 2}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 1);
  CHECK(v[0].value == -1);
  CHECK(validate_intersection_product(form({{-5, 0, 0}, {0, 3, 0}, {0, 0, -1}})).empty());
  CHECK_THROWS_AS(form({{0, 1}, {2, 0}}), ShapeError);
  CHECK_THROWS_AS(IntersectionForm({"A"}, RationalMatrix{{1, 0}, {0, 1}}), DimensionError);
  CHECK_THROWS_AS(divisor({1, -1}), DomainError);
}

TEST_CASE("is_q_exceptional") {
  CHECK(is_q_exceptional(form({{-2}}), {0}));
  CHECK(is_q_exceptional(form({{-2, 1}, {1, -2}}), {0, 1}));
  CHECK(!is_q_exceptional(form({{-1, 2}, {2, -1}}), {0, 1}));
  CHECK(!is_q_exceptional(form({{0}}), {0}));
  CHECK(is_q_exceptional(form({{2, 1}, {1, -2}}), {1}));
  CHECK_THROWS_AS(is_q_exceptional(form({{-2}}), {}), DomainError);
}

TEST_CASE("neg_def_certificate") {
  const auto c1 = neg_def_certificate(form({{-2}}), {0});
  REQUIRE(c1.ok());
  CHECK(*c1.weights == std::vector<Rational>{q(1, 2)});

  const auto c2 = neg_def_certificate(form({{-2, 1}, {1, -2}}), {0, 1});
  REQUIRE(c2.ok());
  CHECK(*c2.weights == std::vector<Rational>{1, 1});

  const auto c3 = neg_def_certificate(form({{-1, 2}, {2, -1}}), {0, 1});
  CHECK(!c3.ok());
  CHECK(c3.solution == std::vector<Rational>{q(-1, 1), q(-1, 1)});
  CHECK(!c3.refusal.empty());

  CHECK_THROWS_AS(neg_def_certificate(form({{-1, 1}, {1, -1}}), {0, 1}), SingularMatrixError);
}

TEST_CASE("membership in M_D") {
  CHECK(in_region_md(form({{-2, 1}, {1, -2}}), divisor({1, 1}), {0, 0}));
  CHECK(in_region_md(form({{2}}), divisor({1}), {1}));
  CHECK(!in_region_md(form({{-2}}), divisor({1}), {q(1, 2)}));
  CHECK(!in_region_md(form({{2}}), divisor({1}), {2}));
}

TEST_CASE("zariski_decompose examples") {
  const auto a = zariski_decompose(form({{2}}), divisor({1}));
  CHECK(a.positive == divisor({1}));
  CHECK(a.negative == divisor({0}));
  CHECK(a.negative_support.empty());
  CHECK(a.gram_s_det == 1);

  const auto b = zariski_decompose(form({{-2}}), divisor({1}));
  CHECK(b.positive == divisor({0}));
  CHECK(b.negative == divisor({1}));

  const IntersectionForm f = form({{2, 1}, {1, -2}});
  const DivisorVec d = divisor({1, 1});
  const auto c = zariski_decompose(f, d);
  CHECK(c.positive == divisor({1, q(1, 2)}));
  CHECK(c.negative == divisor({0, q(1, 2)}));
  CHECK(c.negative_support == IndexSet{1});
  CHECK(c.gram_s_det == -2);
  CHECK(f.pairing(c.positive.coefficients(), {0, 1}) == 0);
  CHECK(f.pairing(c.positive.coefficients(), c.negative.coefficients()) == 0);
  CHECK(all_pass(check_decomposition(f, d, c)));
  CHECK(decompose_oracle(f, d) == c);

  const auto z = zariski_decompose(f, DivisorVec::zero(2));
  CHECK(z.positive.is_zero());
  CHECK(z.negative.is_zero());

  CHECK_THROWS_AS(zariski_decompose(form({{2, -1}, {-1, 2}}), d), AxiomError);
  CHECK_THROWS_AS(zariski_decompose(f, divisor({1})), DimensionError);
}

TEST_CASE("support enlargement takes several rounds") {
  // a chain where only the end pairs negatively with D at first
  const IntersectionForm f = form({{-2, 1, 0}, {1, -2, 1}, {0, 1, 2}});
  const DivisorVec d = divisor({4, 1, 0});
  const auto dec = zariski_decompose(f, d);
  CHECK(all_pass(check_decomposition(f, d, dec)));
  CHECK(decompose_oracle(f, d) == dec);
  CHECK(dec.negative_support == IndexSet{0, 1});
  CHECK(dec.positive.is_zero());
  CHECK(dec.rounds == 2);
}

TEST_CASE("decompose_oracle examples") {
  CHECK(decompose_oracle(form({{-2}}), divisor({1})) == zariski_decompose(form({{-2}}), divisor({1})));
  const auto b = decompose_oracle(form({{2, 1}, {1, -2}}), divisor({1, 1}));
  CHECK(b.positive == divisor({1, q(1, 2)}));
  CHECK(b.negative == divisor({0, q(1, 2)}));
  const auto c = decompose_oracle(form({{-2, 1}, {1, -2}}), divisor({1, 1}));
  CHECK(c.positive == divisor({0, 0}));
  CHECK(c.negative == divisor({1, 1}));
  CHECK(c.gram_s_det == 3);

  CHECK_THROWS_AS(decompose_oracle(form({{-2, 1}, {1, -2}}), divisor({1, 1}), 1), DomainError);
}

TEST_CASE("check_decomposition flags a wrong answer") {
  const IntersectionForm f = form({{2, 1}, {1, -2}});
  const DivisorVec d = divisor({1, 1});
  Decomposition wrong;
  wrong.positive = d;
  wrong.negative = DivisorVec::zero(2);
  const auto checks = check_decomposition(f, d, wrong);
  REQUIRE(checks.size() == 5);
  CHECK(checks[0].name == "sum");
  CHECK(checks[0].passed);
  CHECK(checks[1].name == "positive_nef");
  CHECK(!checks[1].passed);
  CHECK(checks[4].name == "support_union");
}

TEST_CASE("generate_instance") {
  InstanceSpec spec;
  spec.seed = 1;
  spec.m = 3;
  const Instance a = generate_instance(spec);
  const Instance b = generate_instance(spec);
  CHECK(a.form.gram() == b.form.gram());
  CHECK(a.divisor == b.divisor);
  CHECK(a.form.size() == 3);
  CHECK(validate_intersection_product(a.form).empty());

  spec.seed = 2;
  const Instance c = generate_instance(spec);
  CHECK(!(c.form.gram() == a.form.gram() && c.divisor == a.divisor));

  spec.offdiagonal_range = {0, 0};
  const Instance diag = generate_instance(spec);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(diag.form.gram()(i, j) == 0);

  spec.diagonal_range = {-9, -1};
  spec.require_hyperbolic = true;
  spec.max_attempts = 5;
  CHECK_THROWS_AS(generate_instance(spec), GenerationError);

  InstanceSpec hyp;
  hyp.seed = 3;
  hyp.m = 5;
  hyp.require_hyperbolic = true;
  CHECK(signature(generate_instance(hyp).form.gram()).n_plus >= 1);
}

TEST_CASE("property: engine matches oracle and every invariant on random instances") {
  PropertyOptions options;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.m = 1 + seed % 8;
    spec.max_denominator = 4;
    spec.require_hyperbolic = seed % 3 == 0;
    const Instance inst = generate_instance(spec);
    Rng rng(seed);
    const auto failures = verify_instance(inst, options, zariski_decompose, rng);
    CAPTURE(seed);
    CHECK(failures.empty());
    if (!failures.empty()) MESSAGE(failures.front());
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("property: certificate and Sylvester minors agree") {
  Rng rng(31);
  int definite = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
    RationalMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      g(i, i) = static_cast<long>(rng.uniform(-9, 2));
      for (std::size_t j = i + 1; j < m; ++j) g(i, j) = g(j, i) = static_cast<long>(rng.uniform(0, 3));
    }
    const IntersectionForm f(g);
    IndexSet all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    const bool minors = is_q_exceptional(f, all);
    CHECK(minors == (signature(g).n_minus == m));
    if (det_exact(g) == 0) {
      CHECK(!minors);
      continue;
    }
    CHECK(neg_def_certificate(f, all).ok() == minors);
    definite += minors;
  }
  CHECK(definite > 50);
}

TEST_CASE("property: hyperbolic forms have at most m - 1 negative components") {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.m = 5;
    spec.require_hyperbolic = true;
    spec.diagonal_range = {-9, 3};
    const Instance inst = generate_instance(spec);
    const SignatureTriple sig = signature(inst.form.gram());
    if (sig.n_plus != 1 || sig.n_zero != 0) continue;
    const auto dec = zariski_decompose(inst.form, inst.divisor);
    CHECK(dec.negative_support.size() <= 4);
  }
}

TEST_CASE("generator known answers") {
  // mt19937_64 with the default seed: the 10000th output is fixed by the C++ standard
  Rng raw(5489);
  for (int k = 0; k < 9999; ++k) raw.next();
  CHECK(raw.next() == 9981545732273789042ULL);

  Rng rng(7);
  std::vector<std::int64_t> draws;
  for (int k = 0; k < 6; ++k) draws.push_back(rng.uniform(-9, 9));
  CHECK(draws == std::vector<std::int64_t>{-7, 1, 4, 2, 8, -5});

  InstanceSpec spec;
  spec.seed = 1;
  spec.m = 3;
  spec.max_denominator = 4;
  const Instance inst = generate_instance(spec);
  CHECK(inst.form.gram() == RationalMatrix{{2, 2, 0}, {2, 3, 4}, {0, 4, 7}});
  CHECK(inst.divisor == divisor({q(3, 2), 3, q(1, 4)}));
}
