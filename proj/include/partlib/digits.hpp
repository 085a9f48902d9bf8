// Base-m digit expansions, little-endian: n = a_0 + a_1 m + ... + a_s m^s with
// a_0 the least significant digit. The expansion of 0 is the single digit [0].
#pragma once

#include <vector>

#include "partlib/errors.hpp"

namespace partlib {

inline std::vector<long long> digits(long long n, long long m) {
  require(m >= 2, errc::invalid_degree, "digit base must be at least 2");
  require(n >= 0, errc::domain_error, "digit expansion requires a non-negative argument");
  if (n == 0) return {0};
  std::vector<long long> a;
  while (n > 0) {
    a.push_back(n % m);
    n /= m;
  }
  return a;
}

}  // namespace partlib
