// Index sequences K = (k_0, k_1, ...): a finite explicit prefix followed by an
// arithmetic tail k_n = m*n + c. These drive the block recurrences: the value
// sequence is constant on each block [k_n, k_{n+1} - 1].
//
// Conventions used throughout: k_{-n} = -n for n > 0, and sequence values at
// negative indices are 0.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "partlib/errors.hpp"

namespace partlib {

using index_t = long long;

struct k_spec {
  std::vector<index_t> prefix;  // k_0 .. k_{n0-1}, may be empty
  index_t m = 2;                // tail step, >= 2
  index_t c = 0;                // tail offset: k_n = m*n + c for n >= n0
  index_t n0 = 0;               // == prefix.size()

  // k_n, with k_{-n} = -n.
  index_t at(index_t n) const {
    if (n < 0) return n;
    if (n < n0) return prefix[static_cast<size_t>(n)];
    return m * n + c;
  }

  // Largest n with k_n <= j. Requires j >= 0 (= k_0).
  index_t block_of(index_t j) const {
    require(j >= 0, errc::domain_error, "block_of requires a non-negative index");
    if (n0 > 0 && j < at(n0)) {
      // Last prefix position with value <= j.
      auto it = std::upper_bound(prefix.begin(), prefix.end(), j);
      return static_cast<index_t>(it - prefix.begin()) - 1;
    }
    // Tail region: j >= m*n0 + c, so (j - c) / m floors correctly.
    return (j - c) / m;
  }

  // Gap k_{n+1} - k_n.
  index_t gap(index_t n) const { return at(n + 1) - at(n); }

  // Both the limit inferior and superior of the gaps equal the tail step.
  std::pair<index_t, index_t> degrees() const { return {m, m}; }

  // Smallest n such that every gap from n on equals m. The tail always
  // qualifies; walk backwards through the prefix while gaps stay m.
  index_t stable_gap_start() const {
    index_t n = n0;
    while (n > 0 && at(n) - at(n - 1) == m) --n;
    return n;
  }
};

inline k_spec make_k_spec(std::vector<index_t> prefix, index_t m, index_t c,
                          index_t declared_n0 = -1) {
  require(m >= 2, errc::invalid_degree, "tail step must be at least 2");
  if (declared_n0 >= 0) {
    require(declared_n0 == static_cast<index_t>(prefix.size()),
            errc::prefix_length_mismatch,
            "declared prefix length " + std::to_string(declared_n0) + " but " +
                std::to_string(prefix.size()) + " prefix values given");
  }
  k_spec k{std::move(prefix), m, c, static_cast<index_t>(0)};
  k.n0 = static_cast<index_t>(k.prefix.size());
  if (k.n0 == 0) {
    require(c == 0, errc::first_term_nonzero, "k_0 = c must be 0");
  } else {
    require(k.prefix.front() == 0, errc::first_term_nonzero, "k_0 must be 0");
    for (index_t i = 0; i + 1 < k.n0; ++i) {
      require(k.prefix[i] < k.prefix[i + 1], errc::not_strictly_increasing,
              "prefix must be strictly increasing");
    }
    require(k.prefix.back() < m * k.n0 + c, errc::not_strictly_increasing,
            "tail must continue strictly above the prefix");
  }
  return k;
}

}  // namespace partlib
