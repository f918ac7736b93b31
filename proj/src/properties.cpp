#include "zardec/properties.hpp"

#include <algorithm>
#include <numeric>

#include "zardec/bounds.hpp"

namespace zardec {

namespace {

constexpr unsigned long kChainGuard = 5000;

Rational eighths(Rng& rng) { return make_rational(rng.uniform(0, 8), 8); }

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& t) {
  std::vector<Rational> out(v);
  for (auto& x : out) x *= t;
  return out;
}

std::vector<Rational> coordinatewise_max(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Integer common_denominator(const DivisorVec& d) {
  Integer l = 1;
  for (const auto& a : d.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<std::vector<Rational>> sample_region_members(const IntersectionForm& form, const DivisorVec& d,
                                                         std::size_t count, Rng& rng) {
  const std::size_t m = d.size();
  std::vector<std::vector<Rational>> members;
  members.emplace_back(m);
  const std::size_t budget = 40 * count;
  for (std::size_t attempt = 0; attempt < budget && members.size() < count; ++attempt) {
    std::vector<Rational> b(m);
    switch (rng.uniform(0, 2)) {
      case 0:  // uniform in the box [0, a]
        for (std::size_t i = 0; i < m; ++i) b[i] = d[i] * eighths(rng);
        break;
      case 1: {  // a random face of the box, scaled
        const Rational t = eighths(rng);
        for (std::size_t i = 0; i < m; ++i) b[i] = rng.coin() ? d[i] * t : Rational(0);
        break;
      }
      default: {  // join of two accepted members, perturbed downwards
        const auto& x = members[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(members.size()) - 1))];
        const auto& y = members[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(members.size()) - 1))];
        b = coordinatewise_max(x, y);
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m) - 1));
        b[i] = b[i] + (d[i] - b[i]) * eighths(rng);
        break;
      }
    }
    if (in_region_md(form, d, b)) members.push_back(std::move(b));
  }
  const std::size_t found = members.size();
  while (members.size() < count) {
    const auto& base = members[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(found) - 1))];
    members.push_back(scaled(base, eighths(rng)));
  }
  return members;
}

std::vector<std::string> verify_instance(const Instance& instance, const PropertyOptions& options,
                                         const Decomposer& decompose, Rng& rng) {
  const IntersectionForm& form = instance.form;
  const DivisorVec& d = instance.divisor;
  std::vector<std::string> failures;
  auto fail = [&](std::string what) { failures.push_back(std::move(what)); };

  Decomposition dec;
  try {
    dec = decompose(form, d);
  } catch (const std::exception& e) {
    fail(std::string("decompose threw: ") + e.what());
    return failures;
  }

  for (const auto& c : check_decomposition(form, d, dec))
    if (!c.passed) fail("invariant " + c.name + " violated");
  if (dec.rounds > d.support().size()) fail("more rounds than support size");
  if (!failures.empty()) return failures;

  if (form.size() <= options.oracle_limit) {
    try {
      if (!(decompose_oracle(form, d, options.oracle_limit) == dec)) fail("oracle disagrees");
    } catch (const std::exception& e) {
      fail(std::string("oracle threw: ") + e.what());
    }
  }

  try {
    const Decomposition of_p = decompose(form, dec.positive);
    if (of_p.positive != dec.positive || !of_p.negative.is_zero()) fail("P is not its own positive part");
    const Decomposition of_n = decompose(form, dec.negative);
    if (of_n.negative != dec.negative || !of_n.positive.is_zero()) fail("N is not its own negative part");
    for (const Rational& t : {Rational(2), make_rational(1, 3)}) {
      const Decomposition s = decompose(form, d.scaled(t));
      if (s.positive != dec.positive.scaled(t) || s.negative != dec.negative.scaled(t))
        fail("decomposition not equivariant under scaling by " + to_string(t));
    }
  } catch (const std::exception& e) {
    fail(std::string("decompose threw on a derived divisor: ") + e.what());
  }

  const auto members = sample_region_members(form, d, options.member_samples, rng);
  for (const auto& b : members) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] > dec.positive[i]) {
        fail("member of M_D exceeds P at index " + std::to_string(i));
        break;
      }
  }
  for (std::size_t k = 0; k + 1 < members.size(); ++k)
    if (!in_region_md(form, d, coordinatewise_max(members[k], members[k + 1]))) fail("M_D not closed under max");

  const IndexSet& s = dec.negative_support;
  if (!s.empty()) {
    const RationalMatrix gram_s = form.restricted(s);
    for (std::size_t k = 0; k < options.claim_samples; ++k) {
      std::vector<Rational> c(s.size());
      do {
        for (auto& x : c) x = rng.uniform(0, 8);
      } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }));
      const auto gc = gram_s * c;
      if (dot(c, gc) >= 0 || std::none_of(gc.begin(), gc.end(), [](const Rational& x) { return x < 0; }))
        fail("nonnegative combination of negative components is not negative");
    }

    const NegDefCertificate cert = neg_def_certificate(form, s);
    if (!cert.ok()) fail("no positive certificate on the negative support: " + cert.refusal);

    if (is_integral(form.gram())) {
      Integer b = 1;
      for (std::size_t i : s) b = std::max(b, Integer(-form.gram()(i, i).get_num()));
      if (!det_trace_bound_check(form, s, b)) fail("|det Gram_S| exceeds b^|S|");

      const Integer l = common_denominator(d);
      const DivisorVec integral = d.scaled(Rational(l));
      try {
        const CramerAnalysis cr = cramer_analysis(form, integral, s);
        for (const auto& a : cr.coefficients)
          if (!mpz_divisible_p(cr.gram_determinant.get_mpz_t(), a.get_den_mpz_t()))
            fail("Cramer denominator does not divide det Gram_S");
        // lcm | det, |det| <= b^|S| and b^|S| <= (b^|S|)! = denominator_bound(b, |S| + 1)
        const GuardedInteger bound = denominator_bound(b, static_cast<unsigned long>(s.size()) + 1, kChainGuard);
        if (const auto* v = std::get_if<Integer>(&bound); v && cr.common_denominator > *v)
          fail("denominator exceeds denominator_bound(b, |S| + 1)");
      } catch (const std::exception& e) {
        fail(std::string("cramer_analysis threw: ") + e.what());
      }
    }
  }

  const SignatureTriple sig = signature(form.gram());
  if (sig.n_plus == 1 && sig.n_zero == 0 && s.size() > form.size() - 1) fail("|S| exceeds m - 1 on a hyperbolic form");

  return failures;
}

}  // namespace zardec
