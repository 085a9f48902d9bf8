// Independent reference implementations used to cross-check the generic
// evaluator. Nothing here goes through the triple machinery:
//
//   * count_mary        -- partitions of n into powers of m, by the classic
//                          coin-counting DP over the power list.
//   * count_mary_nogaps -- partitions into powers of m where using m^j forces
//                          at least one copy of every lower power. Computed by
//                          reserving one copy of each power 0..j and counting
//                          free completions.
//   * direct_fill_*     -- one-line forward fills of the three built-in
//                          recurrences, written against the raw index
//                          arithmetic instead of the block engine.
#pragma once

#include <vector>

#include "partlib/errors.hpp"
#include "partlib/rings.hpp"

namespace partlib {

// Partitions of 0..n_max into powers of m (unbounded multiplicities).
inline std::vector<bigint> count_mary_range(long long m, long long n_max) {
  require(m >= 2, errc::invalid_degree, "base must be at least 2");
  require(n_max >= 0, errc::domain_error, "range end must be non-negative");
  std::vector<bigint> dp(static_cast<size_t>(n_max) + 1, bigint(0));
  dp[0] = 1;
  for (long long w = 1; w <= n_max; w *= m) {
    for (long long j = w; j <= n_max; ++j) dp[static_cast<size_t>(j)] += dp[static_cast<size_t>(j - w)];
    if (w > n_max / m) break;  // avoid overflow of w *= m
  }
  return dp;
}

inline bigint count_mary(long long m, long long n) {
  require(n >= 0, errc::domain_error, "argument must be non-negative");
  return count_mary_range(m, n)[static_cast<size_t>(n)];
}

// No-gaps variant: sum over the highest used power j of (partitions of
// n - (1 + m + ... + m^j) into powers m^0..m^j). By convention the count for
// n = 0 is 1 (the empty partition).
inline bigint count_mary_nogaps(long long m, long long n) {
  require(m >= 2, errc::invalid_degree, "base must be at least 2");
  require(n >= 0, errc::domain_error, "argument must be non-negative");
  if (n == 0) return 1;
  bigint total = 0;
  long long sigma = 1;  // 1 + m + ... + m^j
  long long power = 1;  // m^j
  for (long long j = 0; sigma <= n; ++j) {
    // Free completions: partitions of n - sigma into powers m^0..m^j.
    long long rem = n - sigma;
    std::vector<bigint> dp(static_cast<size_t>(rem) + 1, bigint(0));
    dp[0] = 1;
    long long w = 1;
    for (long long jj = 0; jj <= j; ++jj) {
      for (long long x = w; x <= rem; ++x) dp[static_cast<size_t>(x)] += dp[static_cast<size_t>(x - w)];
      if (w > rem / m) break;  // larger coins cannot contribute
      w *= m;
    }
    total += dp[static_cast<size_t>(rem)];
    if (power > (n - sigma) / m) break;  // next power alone would push sigma past n
    power *= m;
    sigma += power;
  }
  return total;
}

// Forward fills of the three built-in recurrences, seeded at 1.
inline std::vector<bigint> direct_fill_b(long long m, long long n_max) {
  std::vector<bigint> v(static_cast<size_t>(n_max) + 1);
  v[0] = 1;
  for (long long j = 1; j <= n_max; ++j) {
    v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)];
    if (j % m == 0) v[static_cast<size_t>(j)] += v[static_cast<size_t>(j / m)];
  }
  return v;
}

inline std::vector<bigint> direct_fill_c(long long m, long long n_max) {
  std::vector<bigint> v(static_cast<size_t>(n_max) + 1);
  v[0] = 1;
  if (n_max >= 1) v[1] = 1;
  for (long long j = 2; j <= n_max; ++j) {
    v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)];
    if (j % m == 1 && (j - 1) / m >= 1) v[static_cast<size_t>(j)] += v[static_cast<size_t>((j - 1) / m)];
  }
  return v;
}

inline std::vector<bigint> direct_fill_ovb(long long m, long long n_max) {
  std::vector<bigint> v(static_cast<size_t>(n_max) + 1);
  v[0] = 1;
  for (long long j = 1; j <= n_max; ++j) {
    v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)];
    if (j % m == 0) {
      v[static_cast<size_t>(j)] += v[static_cast<size_t>(j / m)];
      v[static_cast<size_t>(j)] += v[static_cast<size_t>(j / m - 1)];
    }
  }
  return v;
}

}  // namespace partlib
