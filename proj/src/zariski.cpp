#include "zardec/zariski.hpp"

#include <algorithm>
#include <bit>

#include "zardec/random.hpp"

namespace zardec {

namespace {

bool is_sorted_unique(const IndexSet& s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

void require_index_set(const IntersectionForm& form, const IndexSet& s, const char* what) {
  if (s.empty()) throw DomainError(std::string(what) + ": empty index set");
  if (!is_sorted_unique(s)) throw DomainError(std::string(what) + ": index set must be sorted and duplicate-free");
  if (s.back() >= form.size()) throw DimensionError(std::string(what) + ": index out of range");
}

// Position k (0-based) of the first leading principal minor of `g` with the
// wrong sign for negative definiteness, or nullopt if all signs alternate.
std::optional<std::size_t> first_minor_failure(const RationalMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    IndexSet lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = i;
    const Rational minor = det_exact(g.principal_submatrix(lead));
    const int want = (k % 2 == 1) ? -1 : 1;
    if (sgn(minor) != want) return k - 1;
  }
  return std::nullopt;
}

std::string describe_violations(const IntersectionForm& form, const std::vector<AxiomViolation>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ", ";
    out += "(" + form.labels()[x.i] + "," + form.labels()[x.j] + ") = " + to_string(x.value);
  }
  return out;
}

void require_divisor(const IntersectionForm& form, const DivisorVec& d) {
  if (d.size() != form.size()) {
    throw DimensionError("divisor has " + std::to_string(d.size()) + " coefficients, form has " +
                         std::to_string(form.size()) + " primes");
  }
}

// N supported on `s` with q(D - N, D_j) = 0 for j in s.
std::vector<Rational> solve_negative_part(const IntersectionForm& form, const DivisorVec& d, const IndexSet& s,
                                          const std::vector<Rational>& d_pairings) {
  std::vector<Rational> rhs;
  rhs.reserve(s.size());
  for (std::size_t j : s) rhs.push_back(d_pairings[j]);
  const std::vector<Rational> local = solve_exact(form.restricted(s), rhs);
  std::vector<Rational> n(d.size());
  for (std::size_t k = 0; k < s.size(); ++k) n[s[k]] = local[k];
  return n;
}

std::vector<Rational> difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IndexSet support_of(const std::vector<Rational>& v) {
  IndexSet out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(i);
  return out;
}

}  // namespace

IntersectionForm::IntersectionForm(std::vector<std::string> labels, RationalMatrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw ShapeError("intersection form: Gram matrix is not symmetric");
  if (labels_.size() != gram_.rows()) {
    throw DimensionError("intersection form: " + std::to_string(labels_.size()) + " labels for a " +
                         std::to_string(gram_.rows()) + "x" + std::to_string(gram_.rows()) + " Gram matrix");
  }
}

IntersectionForm::IntersectionForm(RationalMatrix gram)
    : IntersectionForm(
          [&] {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("D" + std::to_string(i + 1));
            return labels;
          }(),
          std::move(gram)) {}

std::vector<Rational> IntersectionForm::pairings(const std::vector<Rational>& x) const { return gram_ * x; }

Rational IntersectionForm::pairing(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  return dot(x, gram_ * y);
}

DivisorVec::DivisorVec(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coefficients_[i].canonicalize();
    if (coefficients_[i] < 0) {
      throw DomainError("divisor coefficient " + std::to_string(i) + " is negative: " + to_string(coefficients_[i]));
    }
  }
}

IndexSet DivisorVec::support() const { return support_of(coefficients_); }

bool DivisorVec::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& a) { return a == 0; });
}

DivisorVec DivisorVec::scaled(const Rational& t) const {
  std::vector<Rational> out(coefficients_);
  for (auto& a : out) a *= t;
  return DivisorVec(std::move(out));
}

std::vector<AxiomViolation> validate_intersection_product(const IntersectionForm& form) {
  std::vector<AxiomViolation> out;
  const auto& g = form.gram();
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = i + 1; j < form.size(); ++j)
      if (g(i, j) < 0) out.push_back({i, j, g(i, j)});
  return out;
}

bool is_q_exceptional(const IntersectionForm& form, const IndexSet& s) {
  require_index_set(form, s, "is_q_exceptional");
  return !first_minor_failure(form.restricted(s)).has_value();
}

NegDefCertificate neg_def_certificate(const IntersectionForm& form, const IndexSet& s) {
  require_index_set(form, s, "neg_def_certificate");
  const std::vector<Rational> minus_ones(s.size(), Rational(-1));
  NegDefCertificate out;
  out.solution = solve_exact(form.restricted(s), minus_ones);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (out.solution[k] <= 0) {
      out.refusal = "weight of " + form.labels()[s[k]] + " is " + to_string(out.solution[k]) + ", not positive";
      return out;
    }
  }
  out.weights = out.solution;
  return out;
}

bool in_region_md(const IntersectionForm& form, const DivisorVec& d, const std::vector<Rational>& b) {
  require_divisor(form, d);
  if (b.size() != d.size()) throw DimensionError("in_region_md: candidate length differs from divisor length");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 0 || b[i] > d[i]) return false;
  const std::vector<Rational> q = form.pairings(b);
  for (std::size_t j : d.support())
    if (q[j] < 0) return false;
  return true;
}

Decomposition zariski_decompose(const IntersectionForm& form, const DivisorVec& d) {
  require_divisor(form, d);
  if (const auto bad = validate_intersection_product(form); !bad.empty()) {
    throw AxiomError("not an intersection product; negative pairings: " + describe_violations(form, bad));
  }

  const std::vector<Rational>& a = d.coefficients();
  const IndexSet supp = d.support();
  const std::vector<Rational> d_pairings = form.pairings(a);

  Decomposition out;
  std::vector<Rational> positive = a;
  std::vector<Rational> negative(a.size());
  IndexSet s;
  std::vector<Rational> p_pairings = d_pairings;

  while (true) {
    IndexSet violated;
    for (std::size_t j : supp)
      if (p_pairings[j] < 0) violated.push_back(j);
    if (violated.empty()) break;

    IndexSet merged;
    std::set_union(s.begin(), s.end(), violated.begin(), violated.end(), std::back_inserter(merged));
    s = std::move(merged);
    ++out.rounds;

    const RationalMatrix gram_s = form.restricted(s);
    if (const auto k = first_minor_failure(gram_s)) {
      throw InconsistencyError("support {" + [&] {
        std::string names;
        for (std::size_t i : s) names += (names.empty() ? "" : ",") + form.labels()[i];
        return names;
      }() + "} is not negative definite at " + form.labels()[s[*k]], s[*k]);
    }
    negative = solve_negative_part(form, d, s, d_pairings);
    for (std::size_t j : s) {
      if (negative[j] < 0 || negative[j] > a[j]) {
        throw InconsistencyError("negative coefficient of " + form.labels()[j] + " is " + to_string(negative[j]) +
                                     ", outside [0, " + to_string(a[j]) + "]",
                                 j);
      }
    }
    positive = difference(a, negative);
    p_pairings = form.pairings(positive);
  }

  out.positive = DivisorVec(std::move(positive));
  out.negative = DivisorVec(std::move(negative));
  out.negative_support = out.negative.support();
  out.gram_s_det = s.empty() ? Rational(1) : det_exact(form.restricted(out.negative_support));
  return out;
}

Decomposition decompose_oracle(const IntersectionForm& form, const DivisorVec& d, std::size_t limit) {
  require_divisor(form, d);
  if (form.size() > limit) {
    throw DomainError("decompose_oracle: " + std::to_string(form.size()) + " primes exceed the oracle limit " +
                      std::to_string(limit));
  }
  if (const auto bad = validate_intersection_product(form); !bad.empty()) {
    throw AxiomError("not an intersection product; negative pairings: " + describe_violations(form, bad));
  }

  const std::vector<Rational>& a = d.coefficients();
  const IndexSet supp = d.support();
  const std::vector<Rational> d_pairings = form.pairings(a);
  const std::size_t k = supp.size();

  std::vector<std::uint64_t> masks(std::size_t{1} << k);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });

  std::vector<Decomposition> accepted;
  for (std::uint64_t mask : masks) {
    IndexSet s;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::uint64_t{1} << b)) s.push_back(supp[b]);

    std::vector<Rational> negative(a.size());
    Rational det = 1;
    if (!s.empty()) {
      const RationalMatrix gram_s = form.restricted(s);
      det = det_exact(gram_s);
      if (det == 0 || first_minor_failure(gram_s)) continue;
      negative = solve_negative_part(form, d, s, d_pairings);
    }
    bool ok = support_of(negative) == s;
    for (std::size_t i = 0; ok && i < a.size(); ++i) ok = negative[i] >= 0 && negative[i] <= a[i];
    if (!ok) continue;
    const std::vector<Rational> positive = difference(a, negative);
    const std::vector<Rational> q = form.pairings(positive);
    if (std::any_of(q.begin(), q.end(), [](const Rational& x) { return x < 0; })) continue;
    if (dot(positive, form.gram() * negative) != 0) continue;

    Decomposition dec;
    dec.positive = DivisorVec(positive);
    dec.negative = DivisorVec(std::move(negative));
    dec.negative_support = std::move(s);
    dec.gram_s_det = det;
    accepted.push_back(std::move(dec));
  }

  if (accepted.size() != 1) {
    throw OracleInconsistencyError("decompose_oracle: " + std::to_string(accepted.size()) +
                                   " admissible negative supports, expected exactly one");
  }
  accepted.front().rounds = masks.size();
  return accepted.front();
}

std::vector<CheckResult> check_decomposition(const IntersectionForm& form, const DivisorVec& d,
                                             const Decomposition& dec) {
  const std::size_t m = form.size();
  const bool shaped = d.size() == m && dec.positive.size() == m && dec.negative.size() == m;
  std::vector<CheckResult> out;

  bool sum = shaped;
  for (std::size_t i = 0; sum && i < m; ++i) sum = dec.positive[i] + dec.negative[i] == d[i];
  out.push_back({"sum", sum});

  bool nef = shaped;
  if (nef) {
    const auto q = form.pairings(dec.positive.coefficients());
    nef = std::none_of(q.begin(), q.end(), [](const Rational& x) { return x < 0; });
  }
  out.push_back({"positive_nef", nef});

  bool exceptional = shaped && dec.negative_support == dec.negative.support();
  if (exceptional && !dec.negative_support.empty()) exceptional = is_q_exceptional(form, dec.negative_support);
  out.push_back({"negative_exceptional", exceptional});

  const bool orthogonal = shaped && form.pairing(dec.positive.coefficients(), dec.negative.coefficients()) == 0;
  out.push_back({"orthogonal", orthogonal});

  bool support = shaped;
  if (support) {
    IndexSet joined;
    const IndexSet sp = dec.positive.support();
    const IndexSet sn = dec.negative.support();
    std::set_union(sp.begin(), sp.end(), sn.begin(), sn.end(), std::back_inserter(joined));
    support = joined == d.support();
  }
  out.push_back({"support_union", support});
  return out;
}

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.m == 0) throw DomainError("generate_instance: m must be >= 1");
  const auto check_range = [](const IntRange& r, const char* name) {
    if (r.lo > r.hi) throw DomainError(std::string("generate_instance: empty ") + name);
  };
  check_range(spec.coefficient_range, "coefficient_range");
  check_range(spec.diagonal_range, "diagonal_range");
  check_range(spec.offdiagonal_range, "offdiagonal_range");
  if (spec.offdiagonal_range.lo < 0) throw DomainError("generate_instance: off-diagonal range must be >= 0");
  if (spec.coefficient_range.lo < 0) throw DomainError("generate_instance: coefficients must be >= 0");
  if (spec.max_denominator < 1) throw DomainError("generate_instance: max_denominator must be >= 1");

  Rng rng(spec.seed);
  const std::size_t m = spec.m;
  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    RationalMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      g(i, i) = rng.uniform(spec.diagonal_range.lo, spec.diagonal_range.hi);
      for (std::size_t j = i + 1; j < m; ++j)
        g(i, j) = g(j, i) = rng.uniform(spec.offdiagonal_range.lo, spec.offdiagonal_range.hi);
    }
    if (spec.require_hyperbolic && signature(g).n_plus == 0) continue;

    std::vector<Rational> coefficients(m);
    for (auto& c : coefficients) {
      const std::int64_t num = rng.uniform(spec.coefficient_range.lo, spec.coefficient_range.hi);
      const std::int64_t den = rng.uniform(1, spec.max_denominator);
      c = make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    }
    return Instance{IntersectionForm(std::move(g)), DivisorVec(std::move(coefficients))};
  }
  throw GenerationError("generate_instance: no hyperbolic Gram matrix after " + std::to_string(spec.max_attempts) +
                        " attempts (seed " + std::to_string(spec.seed) + ")");
}

}  // namespace zardec
