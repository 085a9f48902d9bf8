// Symbolic block windows ("levels") for triples with L = (1,-1), R = (1) and
// tail index map k_x = m*x + c.
//
// Writing iota(x) = m*x + c, the level-s window tracks the sequence values at
// block positions iota^{s-1}(n) + e for window offsets e. Each value is an
// integer linear form in the unknowns c_1..c_s, where c_s is the sequence
// value at the level-s window's first position. Level 1 is the
// single form c_1 at offset 0; level s+1 arises by expanding every position
// into its m-long block image and prepending the fresh unknown:
//
//   H[0] = c_{s+1};  H[i+1] = H[i] + G[floor(i/m)]  (G = level-s window)
//
// giving window size W_{s+1} = m*W_s + 1 and offsets
// [m*elo_s - 1, m*ehi_s + m - 1]. All coefficient arithmetic is checked
// against 64-bit overflow.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "partlib/errors.hpp"
#include "partlib/kspec.hpp"

namespace partlib {

struct linear_form {
  std::vector<long long> coeff;  // coefficients of c_1..c_s

  long long eval(const std::vector<long long>& assignment) const {
    long long acc = 0;
    for (size_t i = 0; i < coeff.size(); ++i) {
      long long term = 0, next = 0;
      require(!__builtin_mul_overflow(coeff[i], assignment[i], &term) &&
                  !__builtin_add_overflow(acc, term, &next),
              errc::coefficient_overflow, "form evaluation overflows 64 bits");
      acc = next;
    }
    return acc;
  }
};

struct level_entry {
  index_t offset;       // window offset e: block position iota^{s-1}(n) + e
  long long index_coe;  // concrete index = index_coe * n + index_const ...
  long long index_const;
  linear_form form;
};

struct level_set {
  index_t m = 2, c = 0, s = 1;
  index_t elo = 0, ehi = 0;          // current window offsets at depth s
  index_t n_min = 1;                 // smallest n with the whole tower above the seed
  std::vector<level_entry> entries;  // cumulative: levels 1..s in order
};

// Levels 1..s_max; result[i] is the cumulative set at depth i+1.
inline std::vector<level_set> build_levels(index_t m, index_t c, index_t s_max) {
  require(m >= 2, errc::invalid_degree, "window step must be at least 2");
  require(s_max >= 1, errc::domain_error, "need at least one level");

  std::vector<level_set> out;
  std::vector<linear_form> window{{std::vector<long long>{1}}};
  index_t elo = 0, ehi = 0;
  std::vector<level_entry> cumulative;

  long long pos_coe = 1;   // m^{s-1}
  long long pos_const = 0;  // c*(m^{s-1}-1)/(m-1): iota^{s-1}(n) = pos_coe*n + pos_const
  index_t n_min = 0;

  for (index_t s = 1; s <= s_max; ++s) {
    if (s > 1) {
      // Expand the window one level down and prepend the fresh unknown.
      std::vector<linear_form> next;
      next.reserve(window.size() * static_cast<size_t>(m) + 1);
      linear_form fresh;
      fresh.coeff.assign(static_cast<size_t>(s), 0);
      fresh.coeff.back() = 1;
      next.push_back(fresh);
      for (size_t i = 0; i < window.size() * static_cast<size_t>(m); ++i) {
        const linear_form& gprev = window[i / static_cast<size_t>(m)];
        linear_form f = next.back();
        for (size_t j = 0; j < gprev.coeff.size(); ++j) {
          require(!__builtin_add_overflow(f.coeff[j], gprev.coeff[j], &f.coeff[j]),
                  errc::coefficient_overflow,
                  "level coefficients exceed 64-bit range at depth " + std::to_string(s));
        }
        next.push_back(std::move(f));
      }
      window = std::move(next);
      elo = m * elo - 1;
      ehi = m * ehi + m - 1;
      require(!__builtin_mul_overflow(pos_coe, m, &pos_coe), errc::coefficient_overflow,
              "position coefficient overflow");
      pos_const = pos_const * m + c;
    }
    // Concrete index of offset e: k(iota^{s-1}(n) + e) = m*(pos_coe*n + pos_const + e) + c.
    const long long idx_coe = m * pos_coe;
    for (index_t e = elo; e <= ehi; ++e) {
      level_entry ent;
      ent.offset = e;
      ent.index_coe = idx_coe;
      ent.index_const = m * (pos_const + e) + c;
      ent.form = window[static_cast<size_t>(e - elo)];
      // Pad earlier levels' forms to the current variable count lazily below.
      cumulative.push_back(std::move(ent));
    }
    // Threshold: every tower position iota^{sigma-1}(n) + elo_sigma must stay
    // >= 1; track the binding constraint as levels deepen.
    // ceil((1 - elo - pos_const) / pos_coe) for the current level:
    {
      long long num = 1 - elo - pos_const;
      long long cand = (num <= 0) ? 0 : (num + pos_coe - 1) / pos_coe;
      n_min = std::max(n_min, cand);
    }

    level_set ls;
    ls.m = m;
    ls.c = c;
    ls.s = s;
    ls.elo = elo;
    ls.ehi = ehi;
    ls.n_min = std::max<index_t>(n_min, 1);
    ls.entries = cumulative;
    for (auto& ent : ls.entries) ent.form.coeff.resize(static_cast<size_t>(s), 0);
    out.push_back(std::move(ls));
  }
  return out;
}

// Index family {m^sigma * n + m*t : sigma in 1..s, |t| <= m^(sigma-1) - 1},
// ascending and deduplicated. Defined for n >= 1 (below that the windows
// would reach into the seed region).
inline std::vector<index_t> index_set(index_t m, index_t n, index_t s) {
  require(m >= 2, errc::invalid_degree, "step must be at least 2");
  require(s >= 1, errc::domain_error, "need at least one level");
  require(n >= 1, errc::below_threshold, "index windows are defined from n = 1 on");
  std::set<index_t> acc;
  long long msig = m;       // m^sigma
  long long half = 1;       // m^(sigma-1)
  for (index_t sigma = 1; sigma <= s; ++sigma) {
    for (index_t tt = -(half - 1); tt <= half - 1; ++tt) acc.insert(msig * n + m * tt);
    long long nx;
    require(!__builtin_mul_overflow(msig, m, &nx), errc::coefficient_overflow,
            "index range exceeds 64-bit span");
    half = msig;
    msig = nx;
  }
  return {acc.begin(), acc.end()};
}

}  // namespace partlib
