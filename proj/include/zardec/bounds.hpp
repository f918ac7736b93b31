#pragma once

// Closed-form bounds tying Zariski denominators to negativity of prime
// divisors, and the Cramer-rule analysis behind them.
//
// Factorials whose argument exceeds a guard are kept symbolic: a
// FactorialTerm stores `times * (factorial_of)!` with both integers exact.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zardec/exact_linalg.hpp"
#include "zardec/lattice.hpp"
#include "zardec/zariski.hpp"

namespace zardec {

inline constexpr unsigned long kDefaultFactorialGuard = 100000;

/// BBF_FACTORIAL_GUARD if set to a positive integer, else the default.
unsigned long factorial_guard_from_env();

struct FactorialTerm {
  Integer factorial_of;
  Integer times = 1;
  /// When the argument is a power b^e, kept for display: "(8^20)!".
  std::optional<std::pair<Integer, unsigned long>> power;

  std::string display() const;
  friend bool operator==(const FactorialTerm& a, const FactorialTerm& b) {
    return a.factorial_of == b.factorial_of && a.times == b.times;
  }
};

using GuardedInteger = std::variant<Integer, FactorialTerm>;

std::string display(const GuardedInteger& value);
bool is_materialized(const GuardedInteger& value);

/// (scale_base)^exponent * scale, where scale_base is a FactorialTerm.
struct FactorialPower {
  FactorialTerm base;
  unsigned long exponent;
  Rational scale;

  std::string display() const;
  friend bool operator==(const FactorialPower& a, const FactorialPower& b) {
    return a.base == b.base && a.exponent == b.exponent && a.scale == b.scale;
  }
};

using GuardedRational = std::variant<Rational, FactorialPower>;

std::string display(const GuardedRational& value);

struct CramerAnalysis {
  IndexSet support;
  std::vector<Rational> coefficients;        // a_i = det S_i / det Gram_S
  std::vector<Integer> column_determinants;  // det S_i
  Integer gram_determinant;
  Integer common_denominator;                // lcm of the coefficient denominators
};

/// Cramer's rule on Gram_S a = (q(D, N_1), ..., q(D, N_k)) where S is the
/// negative support of D. Requires an integral form and divisor. Throws
/// DomainError for non-integral input or an S that differs from the
/// decomposition's support, SingularMatrixError for singular Gram_S, and
/// InconsistencyError if the coefficients disagree with zariski_decompose.
CramerAnalysis cramer_analysis(const IntersectionForm& form, const DivisorVec& d, const IndexSet& s);

/// |det Gram_S| <= b^|S|. Requires Gram_S negative definite with diagonal
/// >= -b, otherwise DomainError.
bool det_trace_bound_check(const IntersectionForm& form, const IndexSet& s, const Integer& b);

/// (b^(rho-1))!.
GuardedInteger denominator_bound(const Integer& b, unsigned long rho, unsigned long guard = kDefaultFactorialGuard);

/// d! * d * card_ns.
GuardedInteger reverse_bn_bound(const Integer& d, const Integer& card_ns,
                                unsigned long guard = kDefaultFactorialGuard);

/// (n+1)(2n+3) * ((4 card_a)^(rho-1))!, the least m satisfying the effective
/// birationality inequality.
GuardedInteger birationality_bound(unsigned long n, const Integer& card_a, unsigned long rho,
                                   unsigned long guard = kDefaultFactorialGuard);

/// m0^(2n) * volume.
GuardedRational chow_degree_bound(unsigned long n, const Rational& volume, const GuardedInteger& m0);

struct BoundReport {
  unsigned long rho = 0;
  unsigned long n = 0;
  Rational volume_C;
  Integer card_A;
  Integer exponent_A;
  Integer negativity_bound;          // 4 Card(A_X)
  Integer refined_negativity_bound;  // 4 exponent(A_X)
  GuardedInteger denominator_bound;  // d(X)
  /// d(X)! d(X) Card(A_X); empty when d(X) itself is symbolic.
  std::optional<GuardedInteger> reverse_bn_bound;
  GuardedInteger birationality_m0;
  GuardedRational chow_degree;
};

struct FullReport {
  std::string preset;
  long b2 = 0;
  long h11 = 0;
  long published_max_negative_square = 0;
  BoundReport at_rho;
  BoundReport uniform;  // rho = h11, valid for the whole deformation family
};

/// Throws DomainError unless 1 <= rho <= h11 and volume > 0.
FullReport full_report(const DeformationPreset& preset, unsigned long rho, const Rational& volume,
                       unsigned long guard = kDefaultFactorialGuard);

}  // namespace zardec
