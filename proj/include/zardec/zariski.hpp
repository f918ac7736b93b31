#pragma once

/*
 * Zariski decomposition of effective Q-divisors with respect to an abstract
 * intersection product.
 *
 * An IntersectionForm is the Gram matrix q(D_i, D_j) of a finite family of
 * prime divisors. It is an intersection product when q(D_i, D_j) >= 0 for
 * every pair of distinct primes. For D = sum a_i D_i with a_i >= 0 the
 * decomposition D = P + N is unique with
 *
 *   P nef:         q(P, D_j) >= 0 for every modeled prime D_j,
 *   N exceptional: the Gram matrix of Supp(N) is negative definite (or N = 0),
 *   orthogonal:    q(P, N) = 0.
 *
 * Nefness is checked against the modeled primes only. Primes outside the
 * family pair nonnegatively with P automatically because P is supported on
 * Supp(D) and the form is an intersection product, so the basis check is the
 * complete verifiable content.
 *
 * P is the unique maximal element of
 *   M_D = { b : 0 <= b <= a, q(b, D_j) >= 0 for j in Supp(D) }.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zardec/exact_linalg.hpp"

namespace zardec {

/// Sorted, duplicate-free list of prime indices.
using IndexSet = std::vector<std::size_t>;

class IntersectionForm {
 public:
  /// Throws ShapeError unless the Gram matrix is symmetric, DimensionError if
  /// the label count differs from its size.
  IntersectionForm(std::vector<std::string> labels, RationalMatrix gram);
  /// Labels D1, ..., Dm.
  explicit IntersectionForm(RationalMatrix gram);

  std::size_t size() const noexcept { return gram_.rows(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RationalMatrix& gram() const noexcept { return gram_; }

  /// Row vector (q(x, D_j))_j.
  std::vector<Rational> pairings(const std::vector<Rational>& x) const;
  Rational pairing(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  RationalMatrix restricted(const IndexSet& s) const { return gram_.principal_submatrix(s); }

 private:
  std::vector<std::string> labels_;
  RationalMatrix gram_;
};

/// Effective Q-divisor: nonnegative coefficients over the modeled primes.
class DivisorVec {
 public:
  DivisorVec() = default;
  /// Throws DomainError on a negative coefficient.
  explicit DivisorVec(std::vector<Rational> coefficients);
  static DivisorVec zero(std::size_t m) { return DivisorVec(std::vector<Rational>(m)); }

  std::size_t size() const noexcept { return coefficients_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }

  IndexSet support() const;
  bool is_zero() const;
  DivisorVec scaled(const Rational& t) const;

  friend bool operator==(const DivisorVec&, const DivisorVec&) = default;

 private:
  std::vector<Rational> coefficients_;
};

struct Decomposition {
  DivisorVec positive;
  DivisorVec negative;
  IndexSet negative_support;
  std::size_t rounds = 0;
  Rational gram_s_det = 1;  // det of the Gram matrix on negative_support (1 if empty)

  /// Compares the decomposition itself; `rounds` is bookkeeping and ignored.
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.positive == b.positive && a.negative == b.negative && a.negative_support == b.negative_support &&
           a.gram_s_det == b.gram_s_det;
  }
};

struct AxiomViolation {
  std::size_t i;
  std::size_t j;
  Rational value;
};

/// Every pair i < j with q(D_i, D_j) < 0.
std::vector<AxiomViolation> validate_intersection_product(const IntersectionForm& form);

/// Negative definiteness of the Gram matrix on `s` via leading principal
/// minors: (-1)^k det_k > 0 for k = 1..|s|. Throws DomainError for empty `s`.
bool is_q_exceptional(const IntersectionForm& form, const IndexSet& s);

struct NegDefCertificate {
  /// c with Gram_S c = -1; set only when every entry is strictly positive.
  std::optional<std::vector<Rational>> weights;
  /// The solved vector, whether accepted or not.
  std::vector<Rational> solution;
  std::string refusal;

  bool ok() const noexcept { return weights.has_value(); }
};

/// Solves Gram_S c = -(1,...,1). For a Gram matrix with nonnegative
/// off-diagonal entries, c > 0 holds exactly when Gram_S is negative definite.
/// Throws SingularMatrixError when Gram_S is singular.
NegDefCertificate neg_def_certificate(const IntersectionForm& form, const IndexSet& s);

/// b in M_D.
bool in_region_md(const IntersectionForm& form, const DivisorVec& d, const std::vector<Rational>& b);

/// Support enlargement: start from the primes pairing negatively with D,
/// make P orthogonal to them, add every prime on which the new P is negative,
/// repeat. Throws AxiomError for a form that is not an intersection product
/// and InconsistencyError if an intermediate support is not negative definite
/// or a coefficient leaves [0, a_i].
Decomposition zariski_decompose(const IntersectionForm& form, const DivisorVec& d);

inline constexpr std::size_t kDefaultOracleLimit = 12;

/// Exhaustive search over subsets S of Supp(D), smallest first. A subset is
/// accepted when Gram_S is negative definite and the N solved on S lies in
/// [0, a], has support exactly S, leaves D - N nef and orthogonal to N.
/// `rounds` of the result is the number of subsets examined. Throws DomainError when the
/// form has more than `limit` primes and OracleInconsistencyError unless
/// exactly one subset yields a valid decomposition.
Decomposition decompose_oracle(const IntersectionForm& form, const DivisorVec& d,
                               std::size_t limit = kDefaultOracleLimit);

struct CheckResult {
  std::string name;
  bool passed;
};

/// The five decomposition invariants, in a fixed order: sum, positive_nef,
/// negative_exceptional, orthogonal, support_union.
std::vector<CheckResult> check_decomposition(const IntersectionForm& form, const DivisorVec& d,
                                             const Decomposition& dec);

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
};

struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t m = 3;
  IntRange coefficient_range{0, 4};  // numerators of D
  std::int64_t max_denominator = 1;  // denominators of D drawn from [1, max_denominator]
  IntRange diagonal_range{-9, 9};
  IntRange offdiagonal_range{0, 9};
  bool require_hyperbolic = false;  // resample until n_plus >= 1
  std::size_t max_attempts = 1000;
};

struct Instance {
  IntersectionForm form;
  DivisorVec divisor;
};

/// Deterministic in `spec` (see README, "Instance generator").
Instance generate_instance(const InstanceSpec& spec);

}  // namespace zardec
