#pragma once

// Invariant checks for a single decomposition instance. Drives `zardec fuzz`.

#include <functional>
#include <string>
#include <vector>

#include "zardec/random.hpp"
#include "zardec/zariski.hpp"

namespace zardec {

using Decomposer = std::function<Decomposition(const IntersectionForm&, const DivisorVec&)>;

/// `count` members of M_D: random proposals filtered by in_region_md, topped
/// up with scalings t*b (t in [0,1]) of accepted members. Always contains 0.
std::vector<std::vector<Rational>> sample_region_members(const IntersectionForm& form, const DivisorVec& d,
                                                         std::size_t count, Rng& rng);

struct PropertyOptions {
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::size_t member_samples = 20;
  std::size_t claim_samples = 20;
};

/// Runs every decomposition invariant on one instance and returns a
/// description of each failure (empty when all hold). Exceptions thrown by
/// `decompose` are reported as failures.
std::vector<std::string> verify_instance(const Instance& instance, const PropertyOptions& options,
                                         const Decomposer& decompose, Rng& rng);

}  // namespace zardec
