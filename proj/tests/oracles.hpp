#pragma once

// Independent reference implementations used only by the tests. Each one is
// deliberately naive and shares no code with the library kernels.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zardec/random.hpp"

namespace oracle {

using Int = mpz_class;
using IntRows = std::vector<std::vector<Int>>;

/// Laplace expansion along the first row.
inline Int cofactor_det(const IntRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    IntRows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, s_k = d_k / d_{k-1}. Zero factors are reported as 0.
inline std::vector<Int> invariant_factors(const IntRows& m) {
  const std::size_t n = m.size();
  std::vector<Int> d(n + 1, 0);
  d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        IntRows sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
        const Int det = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      });
    });
    d[k] = g;
  }
  std::vector<Int> s(n);
  for (std::size_t k = 1; k <= n; ++k) s[k - 1] = (d[k] == 0) ? Int(0) : Int(d[k] / d[k - 1]);
  return s;
}

/// b^e by binary exponentiation on plain mpz values.
inline Int power_by_squaring(Int base, unsigned long e) {
  Int result = 1;
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline Int factorial(unsigned long n) {
  Int f = 1;
  for (unsigned long k = 2; k <= n; ++k) f *= k;
  return f;
}

inline IntRows random_square(zardec::Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntRows m(n, std::vector<Int>(n));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(rng.uniform(lo, hi));
  return m;
}

/// Random unimodular matrix: a product of elementary row operations.
inline IntRows random_unimodular(zardec::Rng& rng, std::size_t n, std::size_t steps = 6) {
  IntRows u(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const long k = static_cast<long>(rng.uniform(-2, 2));
    for (std::size_t c = 0; c < n; ++c) u[i][c] += k * u[j][c];
    if (rng.coin()) std::swap(u[i], u[j]);
  }
  return u;
}

}  // namespace oracle
