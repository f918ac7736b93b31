#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "zardec/errors.hpp"

namespace zardec {

/// Portable seeded generator. std::mt19937_64 is fully specified by the
/// standard; the standard distributions are not, so bounded draws use
/// rejection sampling on the raw 64-bit output:
///   span = hi - lo + 1, limit = 2^64 - (2^64 mod span),
///   draw x until x < limit, return lo + (x mod span).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw DomainError("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zardec
