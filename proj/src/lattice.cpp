#include "zardec/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zardec {

IntegralLattice::IntegralLattice(std::string name, IntegerMatrix gram) : name_(std::move(name)), gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw ShapeError("lattice " + name_ + ": Gram matrix is not symmetric");
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Integer IntegralLattice::pairing(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionError("lattice pairing: vector length differs from rank");
  return dot(x, gram_ * y);
}

Block parse_block(const std::string& name) {
  if (name == "U") return Block::U;
  if (name == "E8_minus") return Block::E8Minus;
  if (name == "A2_minus") return Block::A2Minus;
  if (name == "rank1") return Block::Rank1;
  throw DomainError("unknown lattice block \"" + name + "\"");
}

IntegralLattice catalog_block(Block block, std::optional<long> parameter, bool allow_odd) {
  switch (block) {
    case Block::U:
      return IntegralLattice("U", IntegerMatrix{{0, 1}, {1, 0}});
    case Block::A2Minus:
      return IntegralLattice("A2(-1)", IntegerMatrix{{-2, 1}, {1, -2}});
    case Block::E8Minus: {
      // Negative of the E8 Cartan matrix; Bourbaki labelling with the
      // branch node 4 attached to node 2.
      IntegerMatrix g(8, 8);
      for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
      const std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (const auto& e : edges) g(e[0], e[1]) = g(e[1], e[0]) = 1;
      return IntegralLattice("E8(-1)", std::move(g));
    }
    case Block::Rank1: {
      if (!parameter) throw DomainError("rank1 block needs a parameter k");
      const long k = *parameter;
      if (k == 0) throw DomainError("rank1 block with k = 0 is degenerate");
      if (k % 2 != 0 && !allow_odd) throw DomainError("rank1 block <" + std::to_string(k) + "> is odd");
      return IntegralLattice("<" + std::to_string(k) + ">", IntegerMatrix{{Integer(k)}});
    }
  }
  throw DomainError("unknown lattice block");
}

IntegralLattice catalog_block(const std::string& name, std::optional<long> parameter, bool allow_odd) {
  return catalog_block(parse_block(name), parameter, allow_odd);
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
  if (parts.empty()) throw DomainError("direct_sum of an empty list");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rank();
  IntegerMatrix g(total, total);
  std::string name;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(offset + i, offset + j) = p.gram()(i, j);
    offset += p.rank();
    name += (name.empty() ? "" : "+") + p.name();
  }
  return IntegralLattice(name, std::move(g));
}

std::string DiscriminantData::describe() const {
  if (elementary_divisors.empty()) return "trivial";
  std::string out;
  for (const auto& d : elementary_divisors) out += (out.empty() ? "Z/" : " x Z/") + to_string(d);
  return out;
}

DiscriminantData discriminant_group(const IntegralLattice& lattice) {
  const Integer det = lattice.determinant();
  if (det == 0) throw SingularMatrixError("discriminant_group: lattice " + lattice.name() + " is degenerate");
  const SnfResult snf = smith_normal_form(lattice.gram());
  DiscriminantData out;
  for (const auto& d : snf.diagonal) {
    if (d > 1) out.elementary_divisors.push_back(d);
    out.cardinality *= d;
  }
  out.exponent = out.elementary_divisors.empty() ? Integer(1) : out.elementary_divisors.back();
  return out;
}

std::vector<Integer> parse_group_descriptor(const std::string& descriptor) {
  std::string s;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "trivial" || s == "0" || s == "1") return {};
  std::vector<Integer> orders;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, 2, "Z/") != 0) throw ParseError("group descriptor \"" + descriptor + "\": expected Z/<n>");
    pos += 2;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw ParseError("group descriptor \"" + descriptor + "\": missing order");
    const Integer order(s.substr(pos, end - pos), 10);
    if (order == 0) throw ParseError("group descriptor \"" + descriptor + "\": infinite cyclic factor");
    orders.push_back(order);
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != 'x') throw ParseError("group descriptor \"" + descriptor + "\": expected 'x'");
      ++pos;
    }
  }
  // Invariant factors of the product of cyclic groups = SNF of diag(orders).
  const SnfResult snf = smith_normal_form(IntegerMatrix::diagonal(std::span<const Integer>(orders)));
  std::vector<Integer> out;
  for (const auto& d : snf.diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

std::string to_string(DeformationType type) {
  switch (type) {
    case DeformationType::K3n: return "K3n";
    case DeformationType::KummerN: return "Kummer";
    case DeformationType::OG6: return "OG6";
    case DeformationType::OG10: return "OG10";
  }
  return "?";
}

std::optional<DeformationType> parse_deformation_type(const std::string& tag) {
  if (tag == "K3n" || tag == "K3") return DeformationType::K3n;
  if (tag == "Kummer" || tag == "KummerN") return DeformationType::KummerN;
  if (tag == "OG6") return DeformationType::OG6;
  if (tag == "OG10") return DeformationType::OG10;
  return std::nullopt;
}

std::string DeformationPreset::label() const {
  switch (type) {
    case DeformationType::K3n: return "K3^[" + std::to_string(*n) + "]";
    case DeformationType::KummerN: return "Kummer " + std::to_string(*n);
    case DeformationType::OG6: return "OG6";
    case DeformationType::OG10: return "OG10";
  }
  return "?";
}

namespace {

std::vector<IntegralLattice> three_u() {
  const IntegralLattice u = catalog_block(Block::U);
  return {u, u, u};
}

}  // namespace

DeformationPreset preset(DeformationType type, std::optional<long> n) {
  const bool parametrized = type == DeformationType::K3n || type == DeformationType::KummerN;
  if (parametrized && (!n || *n < 2)) {
    throw DomainError(to_string(type) + " needs n >= 2");
  }
  if (!parametrized && n) throw DomainError(to_string(type) + " takes no parameter n");

  std::vector<IntegralLattice> parts = three_u();
  const IntegralLattice e8 = catalog_block(Block::E8Minus);
  long half_dim = 0;
  std::string group;
  long d = 0;
  long square = 0;
  // A_X, order d and the highest |q(E)| of a prime exceptional divisor,
  // as published for each known deformation type.
  switch (type) {
    case DeformationType::K3n:
      parts.push_back(e8);
      parts.push_back(e8);
      parts.push_back(catalog_block(Block::Rank1, -(2 * *n - 2)));
      half_dim = *n;
      group = "Z/" + std::to_string(2 * *n - 2);
      d = 2 * *n - 2;
      square = 8 * *n - 8;
      break;
    case DeformationType::KummerN:
      parts.push_back(catalog_block(Block::Rank1, -(2 * *n + 2)));
      half_dim = *n;
      group = "Z/" + std::to_string(2 * *n + 2);
      d = 2 * *n + 2;
      square = 8 * *n + 8;
      break;
    case DeformationType::OG6:
      parts.push_back(catalog_block(Block::Rank1, -2));
      parts.push_back(catalog_block(Block::Rank1, -2));
      half_dim = 3;
      group = "Z/2 x Z/2";
      d = 2;
      square = 8;
      break;
    case DeformationType::OG10:
      parts.push_back(e8);
      parts.push_back(e8);
      parts.push_back(catalog_block(Block::A2Minus));
      half_dim = 5;
      group = "Z/3";
      d = 3;
      square = 6;
      break;
  }
  IntegralLattice lattice = direct_sum(parts);
  const long b2 = static_cast<long>(lattice.rank());
  return DeformationPreset{type, n, half_dim, std::move(lattice), b2, b2 - 2, group, d, square};
}

Integer bn_bound_general(const IntegralLattice& lattice) { return 4 * discriminant_group(lattice).cardinality; }

Integer bn_bound_refined(const IntegralLattice& lattice) { return 4 * discriminant_group(lattice).exponent; }

DualCurveCheck dual_curve_integrality(const IntegralLattice& lattice, const LatticeVector& e) {
  if (e.coordinates.size() != lattice.rank()) {
    throw DimensionError("dual_curve_integrality: vector has length " + std::to_string(e.coordinates.size()) +
                         ", lattice rank is " + std::to_string(lattice.rank()));
  }
  const std::vector<Integer> ge = lattice.gram() * e.coordinates;
  const Integer q = dot(e.coordinates, ge);
  if (q == 0) throw DomainError("dual_curve_integrality: q(E) = 0 (isotropic class)");
  DualCurveCheck out;
  out.integral = true;
  out.witness.reserve(ge.size());
  for (const auto& g : ge) {
    const Integer twice = 2 * g;
    if (!mpz_divisible_p(twice.get_mpz_t(), q.get_mpz_t())) out.integral = false;
    out.witness.push_back(make_rational(-twice, q));
  }
  return out;
}

}  // namespace zardec
