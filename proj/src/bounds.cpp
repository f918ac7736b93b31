#include "zardec/bounds.hpp"

#include <cstdlib>
#include <numeric>

namespace zardec {

namespace {

Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, unsigned long exponent) {
  return make_rational(power(Integer(base.get_num()), exponent), power(Integer(base.get_den()), exponent));
}

// times * arg!, materialized when arg <= guard.
GuardedInteger guarded_factorial(const Integer& arg, const Integer& times, unsigned long guard,
                                 std::optional<std::pair<Integer, unsigned long>> as_power = std::nullopt) {
  if (arg <= guard) return times * factorial(arg.get_ui());
  return FactorialTerm{arg, times, std::move(as_power)};
}

GuardedInteger scaled(const GuardedInteger& value, const Integer& factor) {
  if (const auto* v = std::get_if<Integer>(&value)) return *v * factor;
  FactorialTerm t = std::get<FactorialTerm>(value);
  t.times *= factor;
  return t;
}

}  // namespace

unsigned long factorial_guard_from_env() {
  const char* raw = std::getenv("BBF_FACTORIAL_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultFactorialGuard;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || raw[0] == '-') return kDefaultFactorialGuard;
  return static_cast<unsigned long>(v);
}

std::string FactorialTerm::display() const {
  std::string arg = power ? "(" + to_string(power->first) + "^" + std::to_string(power->second) + ")!"
                          : "(" + to_string(factorial_of) + ")!";
  return times == 1 ? arg : to_string(times) + " * " + arg;
}

std::string display(const GuardedInteger& value) {
  if (const auto* v = std::get_if<Integer>(&value)) return to_string(*v);
  return std::get<FactorialTerm>(value).display();
}

bool is_materialized(const GuardedInteger& value) { return std::holds_alternative<Integer>(value); }

std::string FactorialPower::display() const {
  std::string out = "(" + base.display() + ")^" + std::to_string(exponent);
  if (scale != 1) out += " * " + to_string(scale);
  return out;
}

std::string display(const GuardedRational& value) {
  if (const auto* v = std::get_if<Rational>(&value)) return to_string(*v);
  return std::get<FactorialPower>(value).display();
}

CramerAnalysis cramer_analysis(const IntersectionForm& form, const DivisorVec& d, const IndexSet& s) {
  if (!is_integral(form.gram())) throw DomainError("cramer_analysis: Gram matrix is not integral");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_integral(d[i])) throw DomainError("cramer_analysis: divisor coefficient " + std::to_string(i) + " is not integral");

  const Decomposition dec = zariski_decompose(form, d);

  CramerAnalysis out;
  out.support = s;
  out.gram_determinant = 1;
  out.common_denominator = 1;
  if (!s.empty()) {
    const IntegerMatrix gram_s = to_integer(form.restricted(s));
    out.gram_determinant = det_exact(gram_s);
    if (out.gram_determinant == 0) throw SingularMatrixError("cramer_analysis: Gram_S is singular");

    const std::vector<Rational> q = form.pairings(d.coefficients());
    for (std::size_t col = 0; col < s.size(); ++col) {
      IntegerMatrix replaced = gram_s;
      for (std::size_t row = 0; row < s.size(); ++row) replaced(row, col) = q[s[row]].get_num();
      out.column_determinants.push_back(det_exact(replaced));
      out.coefficients.push_back(make_rational(out.column_determinants.back(), out.gram_determinant));
      mpz_lcm(out.common_denominator.get_mpz_t(), out.common_denominator.get_mpz_t(),
              out.coefficients.back().get_den_mpz_t());
    }
  }

  if (s != dec.negative_support) {
    throw InconsistencyError("cramer_analysis: index set differs from the negative support of D",
                             s.empty() ? 0 : s.front());
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (out.coefficients[k] != dec.negative[s[k]]) {
      throw InconsistencyError("cramer_analysis: Cramer coefficient " + to_string(out.coefficients[k]) +
                                   " disagrees with the decomposition (" + to_string(dec.negative[s[k]]) + ")",
                               s[k]);
    }
  }
  return out;
}

bool det_trace_bound_check(const IntersectionForm& form, const IndexSet& s, const Integer& b) {
  if (b < 1) throw DomainError("det_trace_bound_check: b must be positive");
  if (!is_q_exceptional(form, s)) throw DomainError("det_trace_bound_check: Gram_S is not negative definite");
  for (std::size_t i : s)
    if (form.gram()(i, i) < -Rational(b)) throw DomainError("det_trace_bound_check: diagonal entry below -b");
  const Rational det = det_exact(form.restricted(s));
  return abs(det) <= Rational(power(b, s.size()));
}

GuardedInteger denominator_bound(const Integer& b, unsigned long rho, unsigned long guard) {
  if (b < 1) throw DomainError("denominator_bound: b must be >= 1");
  if (rho < 1) throw DomainError("denominator_bound: rho must be >= 1");
  return guarded_factorial(power(b, rho - 1), 1, guard, std::make_pair(b, rho - 1));
}

GuardedInteger reverse_bn_bound(const Integer& d, const Integer& card_ns, unsigned long guard) {
  if (d < 1) throw DomainError("reverse_bn_bound: d must be >= 1");
  if (card_ns < 1) throw DomainError("reverse_bn_bound: Card(A_NS) must be >= 1");
  return guarded_factorial(d, d * card_ns, guard);
}

GuardedInteger birationality_bound(unsigned long n, const Integer& card_a, unsigned long rho, unsigned long guard) {
  if (n < 1) throw DomainError("birationality_bound: n must be >= 1");
  if (card_a < 1) throw DomainError("birationality_bound: Card(A_X) must be >= 1");
  // (1/2)(2n+2)(2n+3) = (n+1)(2n+3)
  const Integer prefactor = Integer(n + 1) * Integer(2 * n + 3);
  return scaled(denominator_bound(4 * card_a, rho, guard), prefactor);
}

GuardedRational chow_degree_bound(unsigned long n, const Rational& volume, const GuardedInteger& m0) {
  if (n < 1) throw DomainError("chow_degree_bound: n must be >= 1");
  if (volume <= 0) throw DomainError("chow_degree_bound: volume must be positive");
  if (const auto* v = std::get_if<Integer>(&m0)) {
    if (*v < 1) throw DomainError("chow_degree_bound: m0 must be positive");
    return power(Rational(*v), 2 * n) * volume;
  }
  return FactorialPower{std::get<FactorialTerm>(m0), 2 * n, volume};
}

namespace {

BoundReport report_at(const DeformationPreset& preset, const DiscriminantData& disc, unsigned long rho,
                      const Rational& volume, unsigned long guard) {
  BoundReport r;
  r.rho = rho;
  r.n = static_cast<unsigned long>(preset.half_dimension);
  r.volume_C = volume;
  r.card_A = disc.cardinality;
  r.exponent_A = disc.exponent;
  r.negativity_bound = 4 * disc.cardinality;
  r.refined_negativity_bound = 4 * disc.exponent;
  r.denominator_bound = denominator_bound(r.negativity_bound, rho, guard);
  if (const auto* d = std::get_if<Integer>(&r.denominator_bound)) {
    r.reverse_bn_bound = reverse_bn_bound(*d, disc.cardinality, guard);
  }
  r.birationality_m0 = birationality_bound(r.n, disc.cardinality, rho, guard);
  r.chow_degree = chow_degree_bound(r.n, volume, r.birationality_m0);
  return r;
}

}  // namespace

FullReport full_report(const DeformationPreset& preset, unsigned long rho, const Rational& volume,
                       unsigned long guard) {
  if (rho < 1 || rho > static_cast<unsigned long>(preset.h11)) {
    throw DomainError("full_report: rho = " + std::to_string(rho) + " outside [1, " + std::to_string(preset.h11) +
                      "] for " + preset.label());
  }
  if (volume <= 0) throw DomainError("full_report: volume must be positive");
  const DiscriminantData disc = discriminant_group(preset.lattice);
  FullReport out;
  out.preset = preset.label();
  out.b2 = preset.b2;
  out.h11 = preset.h11;
  out.published_max_negative_square = preset.published_max_negative_square;
  out.at_rho = report_at(preset, disc, rho, volume, guard);
  out.uniform = report_at(preset, disc, static_cast<unsigned long>(preset.h11), volume, guard);
  return out;
}

}  // namespace zardec
