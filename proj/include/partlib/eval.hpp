// Evaluation of block-recurrence sequences, generic over the arithmetic ring.
//
// Two access patterns:
//   * eval(j)       -- memoized top-down with an explicit work stack; cost is
//                      proportional to the number of distinct block heads
//                      reachable from j, so sparse huge indices (like the
//                      composed heads k_{k_n+q}) stay cheap.
//   * eval_range(N) -- one forward pass filling 0..N; the natural choice for
//                      dense scans and congruence searches.
//
// eval_d computes the companion sequence d_T given by
//
//   d_T(k_n+s) = sum_{i=0}^{t} (l_0+...+l_i) b_T(k_{k_n+s-i})
//              + (l_0+...+l_t) [ b_T(k_{k_n-t}) + ... + b_T(k_{k_n+s-1-t}) ],
//
// the square bracket being empty for s = 0. Its defining property is
// d(j) - d(j-1) = sum_i l_i b_T(k_{j-i}); for L = (1,-1) it collapses to
// d_T(j) = b_T(k_j).
#pragma once

#include <unordered_map>
#include <vector>

#include "partlib/errors.hpp"
#include "partlib/triple.hpp"

namespace partlib {

template <class Ring>
class evaluator {
 public:
  using value = typename Ring::value;

  explicit evaluator(triple_spec T, Ring ring = Ring{})
      : T_(std::move(T)), ring_(std::move(ring)) {}

  const triple_spec& triple() const { return T_; }

  // b_T(j); returns 0 for j < 0 by convention.
  value eval(index_t j) {
    if (j < 0) return ring_.zero();
    if (j <= T_.seed_top()) return seed(j);
    return head_value(T_.k.block_of(j));
  }

  // b_T(k_x) with the k_{-n} = -n convention (so negative x yields 0).
  value eval_at_head(index_t x) {
    if (x < 0) return ring_.zero();
    index_t kx = T_.k.at(x);
    if (kx <= T_.seed_top()) return seed(kx);
    return head_value(x);
  }

  // b_T(0..n_max) in one forward pass.
  std::vector<value> eval_range(index_t n_max) {
    require(n_max >= 0, errc::domain_error, "range end must be non-negative");
    const index_t j0 = T_.seed_top();
    std::vector<value> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    for (index_t j = 0; j <= n_max; ++j) {
      if (j <= j0) {
        v.push_back(ring_.from_big(T_.init[static_cast<size_t>(j)]));
        continue;
      }
      index_t n = T_.k.block_of(j);
      if (T_.k.at(n) != j) {  // interior of a block: flat
        v.push_back(v.back());
        continue;
      }
      value acc = ring_.zero();
      for (index_t i = 0; i <= T_.u(); ++i) {
        index_t raw = n - i;
        if (raw < 0) continue;
        acc = ring_.add(acc, ring_.mul_ll(v[static_cast<size_t>(raw)], T_.R[static_cast<size_t>(i)]));
      }
      for (index_t i = 1; i <= T_.t(); ++i) {
        index_t d = n - i;
        if (d < 0) continue;  // b_T(k_d) = b_T(negative) = 0
        index_t kd = T_.k.at(d);
        acc = ring_.sub(acc, ring_.mul_ll(v[static_cast<size_t>(kd)], T_.L[static_cast<size_t>(i)]));
      }
      v.push_back(T_.L[0] == 1 ? acc : ring_.sub(ring_.zero(), acc));
    }
    return v;
  }

  // d_T(j) per the formula above.
  value eval_d(index_t j) {
    require(j >= 0, errc::domain_error, "d_T is defined for non-negative indices");
    const index_t n = T_.k.block_of(j);
    const index_t s = j - T_.k.at(n);
    const index_t t = T_.t();
    value out = ring_.zero();
    long long lpre = 0;
    for (index_t i = 0; i <= t; ++i) {
      lpre += T_.L[static_cast<size_t>(i)];
      out = ring_.add(out, ring_.mul_ll(eval_at_head(T_.k.at(n) + s - i), lpre));
    }
    const long long l = lpre;  // full sum of left coefficients
    if (l != 0) {
      value bracket = ring_.zero();
      for (index_t w = T_.k.at(n) - t; w <= T_.k.at(n) + s - 1 - t; ++w) {
        bracket = ring_.add(bracket, eval_at_head(w));
      }
      out = ring_.add(out, ring_.mul_ll(bracket, l));
    }
    return out;
  }

 private:
  value seed(index_t j) { return ring_.from_big(T_.init[static_cast<size_t>(j)]); }

  // Memoized head value b_T(k_n) for n with k_n above the seed. Resolved with
  // an explicit stack; dependencies always have strictly smaller block index,
  // so the walk terminates.
  value head_value(index_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<index_t> stack{n};
    while (!stack.empty()) {
      index_t cur = stack.back();
      if (memo_.count(cur)) {
        stack.pop_back();
        continue;
      }
      index_t kcur = T_.k.at(cur);
      if (kcur <= T_.seed_top()) {
        memo_.emplace(cur, seed(kcur));
        stack.pop_back();
        continue;
      }
      bool ready = true;
      auto need = [&](index_t blk) {
        if (T_.k.at(blk) <= T_.seed_top()) return;  // seeded head
        if (!memo_.count(blk)) {
          stack.push_back(blk);
          ready = false;
        }
      };
      for (index_t i = 1; i <= T_.t(); ++i) {
        if (cur - i >= 0) need(cur - i);
      }
      for (index_t i = 0; i <= T_.u(); ++i) {
        index_t raw = cur - i;
        if (raw > T_.seed_top()) need(T_.k.block_of(raw));
      }
      if (!ready) continue;
      value acc = ring_.zero();
      for (index_t i = 0; i <= T_.u(); ++i) {
        index_t raw = cur - i;
        if (raw < 0) continue;
        acc = ring_.add(acc, ring_.mul_ll(raw_value(raw), T_.R[static_cast<size_t>(i)]));
      }
      for (index_t i = 1; i <= T_.t(); ++i) {
        index_t d = cur - i;
        if (d < 0) continue;
        acc = ring_.sub(acc, ring_.mul_ll(head_or_seed(d), T_.L[static_cast<size_t>(i)]));
      }
      memo_.emplace(cur, T_.L[0] == 1 ? acc : ring_.sub(ring_.zero(), acc));
      stack.pop_back();
    }
    return memo_.at(n);
  }

  // b_T(raw) assuming every needed head above the seed is memoized. An index
  // past the seed can still sit in a block whose head is seeded (the seed may
  // end mid-block); flatness makes it equal to that head value.
  value raw_value(index_t raw) {
    if (raw < 0) return ring_.zero();
    if (raw <= T_.seed_top()) return seed(raw);
    index_t blk = T_.k.block_of(raw);
    index_t kb = T_.k.at(blk);
    if (kb <= T_.seed_top()) return seed(kb);
    return memo_.at(blk);
  }
  // b_T(k_d) for d >= 0, assuming memoized when above the seed.
  value head_or_seed(index_t d) {
    index_t kd = T_.k.at(d);
    if (kd <= T_.seed_top()) return seed(kd);
    return memo_.at(d);
  }

  triple_spec T_;
  Ring ring_;
  std::unordered_map<index_t, value> memo_;
};

using exact_evaluator = evaluator<exact_ring>;
using mod_evaluator = evaluator<mod_ring>;

}  // namespace partlib
