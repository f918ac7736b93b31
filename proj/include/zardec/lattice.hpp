#pragma once

// Integral quadratic lattices: standard blocks, direct sums, discriminant
// groups and the deformation-type presets of irreducible symplectic
// manifolds (K3^[n], generalized Kummer, O'Grady 6 and 10).

#include <optional>
#include <string>
#include <vector>

#include "zardec/exact_linalg.hpp"

namespace zardec {

class IntegralLattice {
 public:
  /// Throws ShapeError unless `gram` is square and symmetric.
  IntegralLattice(std::string name, IntegerMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntegerMatrix& gram() const noexcept { return gram_; }
  const std::string& name() const noexcept { return name_; }

  Integer determinant() const { return det_exact(gram_); }
  bool is_even() const;

  /// q(x, y) = x^T G y.
  Integer pairing(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

 private:
  std::string name_;
  IntegerMatrix gram_;
};

/// Coordinates of a lattice element in the lattice basis.
struct LatticeVector {
  std::vector<Integer> coordinates;
};

enum class Block { U, E8Minus, A2Minus, Rank1 };

/// Parses "U", "E8_minus", "A2_minus", "rank1". Throws DomainError.
Block parse_block(const std::string& name);

/// `parameter` is the k of rank1 <k>; it must be nonzero and, unless
/// `allow_odd` is set, even.
IntegralLattice catalog_block(Block block, std::optional<long> parameter = std::nullopt, bool allow_odd = false);
IntegralLattice catalog_block(const std::string& name, std::optional<long> parameter = std::nullopt,
                              bool allow_odd = false);

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);

struct DiscriminantData {
  std::vector<Integer> elementary_divisors;  // entries > 1, divisibility chain
  Integer cardinality = 1;
  Integer exponent = 1;

  bool is_cyclic() const noexcept { return elementary_divisors.size() <= 1; }
  /// "trivial", "Z/3", "Z/2 x Z/2", ...
  std::string describe() const;
};

DiscriminantData discriminant_group(const IntegralLattice& lattice);

/// Invariant factors (> 1) of a finite abelian group written as a product of
/// cyclic factors, e.g. "Z/2 x Z/3" -> [6]. Throws ParseError.
std::vector<Integer> parse_group_descriptor(const std::string& descriptor);

enum class DeformationType { K3n, KummerN, OG6, OG10 };

std::string to_string(DeformationType type);
/// Accepts "K3n", "K3", "Kummer", "KummerN", "OG6", "OG10" (case-sensitive).
std::optional<DeformationType> parse_deformation_type(const std::string& tag);

struct DeformationPreset {
  DeformationType type;
  std::optional<long> n;  // parameter of K3^[n] / Kummer n
  long half_dimension;    // dim X = 2 * half_dimension
  IntegralLattice lattice;
  long b2;
  long h11;
  std::string published_A;
  long published_d;
  long published_max_negative_square;

  std::string label() const;
};

/// n >= 2 is required for K3n and KummerN and forbidden for OG6/OG10.
DeformationPreset preset(DeformationType type, std::optional<long> n = std::nullopt);

/// 4 * Card(A_L).
Integer bn_bound_general(const IntegralLattice& lattice);
/// 4 * exponent(A_L).
Integer bn_bound_refined(const IntegralLattice& lattice);

struct DualCurveCheck {
  bool integral = false;
  /// -2 * G e / q(e), one value per basis vector.
  std::vector<Rational> witness;
};

/// Tests whether -2 q(E, .) / q(E) is an integral functional on the lattice.
/// Throws DomainError for isotropic E and DimensionError on length mismatch.
DualCurveCheck dual_curve_integrality(const IntegralLattice& lattice, const LatticeVector& e);

}  // namespace zardec
