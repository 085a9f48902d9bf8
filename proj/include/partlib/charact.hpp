// Digit-based closed forms for the built-in families modulo m, mu2(m) (= m^2
// for odd m, m^2/2 for even m), m^2 and 2m, plus the exact block-sum identity
// for composed heads b_T(k_{k_n+q}) and its mod-m reduction.
//
// Product ranges follow the convention: a product over an empty range
// (hi == lo-1) is 1; over a reversed range (hi < lo-1) it is 0.
#pragma once

#include <vector>

#include "partlib/digits.hpp"
#include "partlib/eval.hpp"
#include "partlib/oracle.hpp"

namespace partlib {

inline long long mu2(long long m) { return (m % 2 == 0) ? m * m / 2 : m * m; }

namespace detail {

// Product of f(j) for j in [lo, hi] mod M, with the empty/reversed convention.
template <class F>
long long prod_range_mod(F f, long long lo, long long hi, long long M) {
  if (hi - lo == -1) return 1 % M;
  if (hi < lo - 1) return 0;
  long long p = 1 % M;
  for (long long j = lo; j <= hi; ++j) p = (p * (f(j) % M)) % M;
  return p;
}

}  // namespace detail

// Product of (a_j + 1) over all base-m digits, mod m.
inline long long char_b_mod_m(long long m, long long n) {
  auto a = digits(n, m);
  long long p = 1 % m;
  for (long long d : a) p = (p * (d + 1)) % m;
  return p;
}

// The refinement mod mu2(m): product term plus m times a digit-pair correction.
inline long long char_b_mod_mu2(long long m, long long n) {
  auto a = digits(n, m);
  const long long M = mu2(m);
  const long long s = static_cast<long long>(a.size()) - 1;
  auto ap1 = [&](long long j) { return a[static_cast<size_t>(j)] + 1; };
  long long out = detail::prod_range_mod(ap1, 0, s, M);
  for (long long i = 1; i <= s; ++i) {
    long long tri = (a[static_cast<size_t>(i)] * (a[static_cast<size_t>(i)] + 1) / 2) % M;
    long long left = detail::prod_range_mod(ap1, 0, i - 2, M);
    long long right = detail::prod_range_mod(ap1, i + 1, s, M);
    out = (out + m % M * tri % M * left % M * right) % M;
  }
  return out;
}

// Product of (2 a_j + 1) over all base-m digits, mod m.
inline long long char_ovb_mod_m(long long m, long long n) {
  auto a = digits(n, m);
  long long p = 1 % m;
  for (long long d : a) p = (p * (2 * d + 1)) % m;
  return p;
}

// Refinement mod m^2; defined only when every digit of n is nonzero.
inline long long char_ovb_mod_m2(long long m, long long n) {
  auto a = digits(n, m);
  for (long long d : a)
    require(d != 0, errc::zero_digit, "all base-m digits must be nonzero");
  const long long M = m * m;
  const long long s = static_cast<long long>(a.size()) - 1;
  auto f = [&](long long j) { return 2 * a[static_cast<size_t>(j)] + 1; };
  long long out = detail::prod_range_mod(f, 0, s, M);
  for (long long i = 1; i <= s; ++i) {
    long long sq = (a[static_cast<size_t>(i)] * a[static_cast<size_t>(i)]) % M;
    long long left = detail::prod_range_mod(f, 0, i - 2, M);
    long long right = detail::prod_range_mod(f, i + 1, s, M);
    out = (out + 2 * m % M * sq % M * left % M * right) % M;
  }
  return out;
}

// Product form mod 2m; requires even m and zero-free digits.
inline long long char_ovb_mod_2m(long long m, long long n) {
  require(m % 2 == 0, errc::odd_base, "modulus 2m form requires even base");
  auto a = digits(n, m);
  for (long long d : a)
    require(d != 0, errc::zero_digit, "all base-m digits must be nonzero");
  const long long M = 2 * m;
  long long p = 1 % M;
  for (long long d : a) p = (p * (2 * d + 1)) % M;
  return p;
}

// Value of the no-gaps family at m*n+1 mod m, by unwinding
// value(m(mn'+q+1)+1) = 1 + (q+1)*value(mn'+1) down to n <= m, where the
// direct fill supplies the base case. Defined for n >= 1.
inline long long char_c_mod_m(long long m, long long n) {
  require(n >= 1, errc::domain_error, "defined for n >= 1");
  if (n <= m) {
    auto v = direct_fill_c(m, m * n + 1);
    return static_cast<long long>(v[static_cast<size_t>(m * n + 1)] % m);
  }
  long long q = (n - 1) % m;
  long long np = (n - 1) / m;
  return (1 + (q + 1) % m * char_c_mod_m(m, np)) % m;
}

namespace detail {

struct head_identity_ctx {
  index_t n0;  // first block index from which all gaps equal the tail step
  index_t m;
  index_t u;
};

inline head_identity_ctx check_head_identity_hypotheses(const triple_spec& T) {
  require(T.L.size() == 2 && T.L[0] == 1 && T.L[1] == -1, errc::hypothesis_violated,
          "identity requires L = (1,-1)");
  const index_t m = T.k.m;
  const index_t u = T.u();
  require(u < m, errc::hypothesis_violated, "identity requires u < the stable gap");
  const index_t n0 = T.k.stable_gap_start();
  if (n0 >= 1) {
    require(u < T.k.gap(n0 - 1), errc::hypothesis_violated,
            "identity requires u < the gap entering the stable region");
  }
  return {n0, m, u};
}

}  // namespace detail

// Exact value of b_T(k_{k_n+q}) as a sum of block contributions:
//
//   b_T(k_{k_{n0}-1})  +  b_T(k_{n0-1}) * sum_{i=1}^{u} i r_i
//   + b_T(k_n)   * sum_{i=0}^{q} (q-i+1) r_i
//   + b_T(k_{n-1}) * sum_{i=q+1}^{u} (m+q-i+1) r_i
//   + m * (sum_{i=0}^{q} r_i)   * sum_{j=n0}^{n-1} b_T(k_j)
//   + m * (sum_{i=q+1}^{u} r_i) * sum_{j=n0}^{n-2} b_T(k_j).
//
// The two trailing terms differ because for i <= q the summation window ends
// at or beyond the head of block n (all of blocks n0..n-1 complete), while
// for i > q it ends inside block n-1, which therefore must not be counted as
// a complete block.
inline bigint lemchar_rhs(exact_evaluator& ev, index_t n, index_t q) {
  const triple_spec& T = ev.triple();
  auto ctx = detail::check_head_identity_hypotheses(T);
  require(n >= ctx.n0, errc::domain_error, "n must be at least the stable-gap start");
  require(0 <= q && q < ctx.m, errc::domain_error, "q must lie in [0, m-1]");

  auto r = [&](index_t i) -> long long {
    return (0 <= i && i <= ctx.u) ? T.R[static_cast<size_t>(i)] : 0;
  };
  bigint out = 0;
  // Head just below the first stable head, as a block index: k_{n0} - 1.
  {
    index_t x = T.k.at(ctx.n0) - 1;
    out += (x < 0) ? bigint(0) : ev.eval_at_head(x);
  }
  {
    long long w = 0;
    for (index_t i = 1; i <= ctx.u; ++i) w += i * r(i);
    out += ev.eval_at_head(ctx.n0 - 1) * w;
  }
  {
    long long w = 0;
    for (index_t i = 0; i <= q; ++i) w += (q - i + 1) * r(i);
    out += ev.eval_at_head(n) * w;
  }
  {
    long long w = 0;
    for (index_t i = q + 1; i <= ctx.u; ++i) w += (ctx.m + q - i + 1) * r(i);
    out += ev.eval_at_head(n - 1) * w;
  }
  {
    long long rlo = 0, rhi = 0;
    for (index_t i = 0; i <= q; ++i) rlo += r(i);
    for (index_t i = q + 1; i <= ctx.u; ++i) rhi += r(i);
    bigint partial = 0;
    for (index_t j = ctx.n0; j <= n - 2; ++j) partial += ev.eval_at_head(j);
    bigint full = partial;
    if (n - 1 >= ctx.n0) full += ev.eval_at_head(n - 1);
    out += bigint(ctx.m) * (bigint(rlo) * full + bigint(rhi) * partial);
  }
  return out;
}

inline bigint lemchar_rhs(const triple_spec& T, index_t n, index_t q) {
  exact_evaluator ev(T);
  return lemchar_rhs(ev, n, q);
}

// The same identity reduced mod m: the block-sum terms vanish and the fourth
// coefficient simplifies to (q-i+1).
inline long long charact_general(exact_evaluator& ev, index_t n, index_t q) {
  const triple_spec& T = ev.triple();
  auto ctx = detail::check_head_identity_hypotheses(T);
  require(n >= ctx.n0, errc::domain_error, "n must be at least the stable-gap start");
  require(0 <= q && q < ctx.m, errc::domain_error, "q must lie in [0, m-1]");

  auto r = [&](index_t i) -> long long {
    return (0 <= i && i <= ctx.u) ? T.R[static_cast<size_t>(i)] : 0;
  };
  const long long M = ctx.m;
  auto norm = [&](bigint v) -> long long {
    v %= M;
    if (v < 0) v += M;
    return static_cast<long long>(v);
  };
  bigint out = 0;
  {
    index_t x = T.k.at(ctx.n0) - 1;
    out += (x < 0) ? bigint(0) : ev.eval_at_head(x);
  }
  {
    long long w = 0;
    for (index_t i = 1; i <= ctx.u; ++i) w += i * r(i);
    out += ev.eval_at_head(ctx.n0 - 1) * w;
  }
  {
    long long w = 0;
    for (index_t i = 0; i <= q; ++i) w += (q - i + 1) * r(i);
    out += ev.eval_at_head(n) * w;
  }
  {
    long long w = 0;
    for (index_t i = q + 1; i <= ctx.u; ++i) w += (q - i + 1) * r(i);
    out += ev.eval_at_head(n - 1) * w;
  }
  return norm(out);
}

inline long long charact_general(const triple_spec& T, index_t n, index_t q) {
  exact_evaluator ev(T);
  return charact_general(ev, n, q);
}

}  // namespace partlib
