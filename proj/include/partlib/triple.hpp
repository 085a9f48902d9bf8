// A recurrence triple T = (K, L, R) with initial values. The sequence b_T it
// defines is flat on each block [k_n, k_{n+1} - 1], and block-head values obey
//
//     l_0 b_T(k_n) + l_1 b_T(k_{n-1}) + ... + l_t b_T(k_{n-t})
//       = r_0 b_T(n) + r_1 b_T(n-1) + ... + r_u b_T(n-u),
//
// with b_T(q) = 0 for q < 0 and k_{-n} = -n. Built-in families:
//   b   : K = (mn),             L = (1,-1), R = (1)    -- counts partitions of
//         n into powers of m
//   c   : K = 0, mn+1 (n >= 1), L = (1,-1), R = (1)    -- the no-gaps variant
//   ovb : K = (mn),             L = (1,-1), R = (1,1)  -- heads add two
//         consecutive terms
#pragma once

#include <string>
#include <vector>

#include "partlib/errors.hpp"
#include "partlib/kspec.hpp"
#include "partlib/rings.hpp"

namespace partlib {

struct triple_spec {
  std::string name;
  k_spec k;
  std::vector<long long> L;  // l_0 in {+1, -1}
  std::vector<long long> R;
  std::vector<bigint> init;  // b_T(0) .. b_T(j0)

  index_t t() const { return static_cast<index_t>(L.size()) - 1; }
  index_t u() const { return static_cast<index_t>(R.size()) - 1; }
  index_t seed_top() const { return static_cast<index_t>(init.size()) - 1; }
  long long l_sum() const {
    long long s = 0;
    for (long long x : L) s += x;
    return s;
  }
  long long r_sum() const {
    long long s = 0;
    for (long long x : R) s += x;
    return s;
  }
};

inline triple_spec make_triple(std::string name, k_spec k, std::vector<long long> L,
                               std::vector<long long> R, std::vector<bigint> init) {
  require(!L.empty() && (L.front() == 1 || L.front() == -1), errc::unsupported_triple,
          "leading left coefficient must be +1 or -1");
  require(!R.empty(), errc::unsupported_triple, "right coefficient list must be non-empty");
  require(!init.empty(), errc::seed_too_short, "at least b_T(0) must be seeded");

  triple_spec T{std::move(name), std::move(k), std::move(L), std::move(R), std::move(init)};
  const index_t j0 = T.seed_top();

  // Evaluation progress: a block head above the seed with k_n = n would make
  // the head equation refer to itself. k is strictly increasing from 0, so
  // k_n = n can only happen on an identity prefix or at the single tail
  // solution of m*n + c = n.
  for (index_t n = 0; n < T.k.n0; ++n) {
    require(!(T.k.at(n) == n && n > j0), errc::seed_too_short,
            "seed must cover index " + std::to_string(n));
  }
  if ((-T.k.c) % (T.k.m - 1) == 0) {
    index_t n = -T.k.c / (T.k.m - 1);
    if (n >= T.k.n0 && T.k.at(n) == n) {
      require(n <= j0, errc::seed_too_short, "seed must cover index " + std::to_string(n));
    }
  }
  // Seeded values inside one block must already be flat.
  for (index_t j = 1; j <= j0; ++j) {
    if (T.k.block_of(j) == T.k.block_of(j - 1)) {
      require(T.init[static_cast<size_t>(j)] == T.init[static_cast<size_t>(j - 1)],
              errc::domain_error,
              "seed values must be constant within a block (index " + std::to_string(j) + ")");
    }
  }
  return T;
}

enum class family { b, c, ovb };

inline const char* family_name(family f) {
  switch (f) {
    case family::b: return "b";
    case family::c: return "c";
    case family::ovb: return "ovb";
  }
  return "?";
}

inline triple_spec builtin_triple(family f, index_t m) {
  require(m >= 2, errc::invalid_degree, "family degree must be at least 2");
  switch (f) {
    case family::b:
      return make_triple("b_" + std::to_string(m), make_k_spec({}, m, 0), {1, -1}, {1},
                         {bigint(1)});
    case family::c:
      return make_triple("c_" + std::to_string(m), make_k_spec({0}, m, 1), {1, -1}, {1},
                         {bigint(1), bigint(1)});
    case family::ovb:
      return make_triple("ovb_" + std::to_string(m), make_k_spec({}, m, 0), {1, -1}, {1, 1},
                         {bigint(1)});
  }
  throw error(errc::domain_error, "unknown family");
}

}  // namespace partlib
