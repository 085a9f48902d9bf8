// Arithmetic backends for the evaluator: exact big integers and fixed-modulus
// machine-word residues. Both expose the same tiny interface so evaluation is
// written once.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "partlib/errors.hpp"

namespace partlib {

using bigint = boost::multiprecision::cpp_int;

// Exact integer arithmetic.
struct exact_ring {
  using value = bigint;
  value from_ll(long long x) const { return value(x); }
  value from_big(const bigint& x) const { return x; }
  value zero() const { return value(0); }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  value mul_ll(const value& a, long long b) const { return a * b; }
  bool is_zero(const value& a) const { return a == 0; }
};

// Arithmetic in Z/hZ with h held in a 64-bit word; products go through
// 128-bit intermediates so any h < 2^63 is safe.
struct mod_ring {
  using value = std::uint64_t;
  std::uint64_t h;

  explicit mod_ring(std::uint64_t modulus) : h(modulus) {
    require(h >= 2, errc::domain_error, "modulus must be at least 2");
  }
  value from_ll(long long x) const {
    long long r = x % static_cast<long long>(h);
    if (r < 0) r += static_cast<long long>(h);
    return static_cast<value>(r);
  }
  value from_big(const bigint& x) const {
    bigint r = x % h;
    if (r < 0) r += h;
    return static_cast<value>(r);
  }
  value zero() const { return 0; }
  value add(value a, value b) const {
    value s = a + b;
    return s >= h ? s - h : s;
  }
  value sub(value a, value b) const { return a >= b ? a - b : a + h - b; }
  value mul(value a, value b) const {
    return static_cast<value>((static_cast<unsigned __int128>(a) * b) % h);
  }
  value mul_ll(value a, long long b) const { return mul(a, from_ll(b)); }
  bool is_zero(value a) const { return a == 0; }
};

}  // namespace partlib
