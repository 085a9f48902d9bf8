// Avoidance rank over the symbolic windows of levels.hpp, computed by depth-
// first search on residue windows.
//
// An assignment (c_1, ..., c_s) mod h "survives" depth s if no form in the
// cumulative level-s set vanishes mod h. rank(m, h) is the least s at which
// no assignment survives; the search reports ">cutoff" with a surviving
// witness when a survivor still exists at the cutoff depth.
//
// The DFS never materializes symbolic coefficients: a node carries the
// residue values of the current window, and a child window is rebuilt with
// W_{s+1} = m*W_s + 1 additions mod h, pruning on the first zero.
//
// Root canonicalization: all forms are homogeneous linear in the c_i, so the
// unit group of Z/hZ acts on surviving assignments. Every orbit of nonzero
// c_1 values contains exactly one divisor of h (the gcd), and for even h the
// even residues form a union of such orbits; the root loop therefore ranges
// over (even) divisors < h instead of all residues.
#pragma once

#include <algorithm>
#include <atomic>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "partlib/errors.hpp"
#include "partlib/eval.hpp"
#include "partlib/report.hpp"
#include "partlib/triple.hpp"

namespace partlib {

enum class assign_domain { all_residues, even_residues };

struct rank_result {
  index_t m = 2, h = 2, cutoff = 13;
  bool exceeded = false;           // survivor at the cutoff depth: rank > cutoff
  index_t rank = 0;                // meaningful when !exceeded
  std::vector<long long> witness;  // the cutoff-depth survivor when exceeded
  unsigned long long nodes = 0;

  std::string display() const {
    return exceeded ? (">" + std::to_string(cutoff)) : std::to_string(rank);
  }
  std::string csv_value() const {
    return exceeded ? ("gt:" + std::to_string(cutoff)) : std::to_string(rank);
  }
};

namespace detail {

inline std::vector<long long> divisor_roots(index_t h, bool even_only) {
  std::vector<long long> roots;
  for (index_t d = 1; d < h; ++d) {
    if (h % d == 0 && (!even_only || d % 2 == 0)) roots.push_back(d);
  }
  return roots;
}

struct rank_dfs {
  index_t m, h, cutoff;
  std::vector<long long> domain;  // candidate values for c_s, s >= 2
  rank_result res;
  std::vector<long long> assignment;
  // win[d] holds the residue window of the node currently open at depth d.
  // Window sizes are fixed per depth (W_{d+1} = m*W_d + 1), so the buffers
  // are allocated once; a child overwrites win[d+1] only after the previous
  // child's subtree has been fully explored.
  std::vector<std::vector<index_t>> win;

  void prepare() {
    win.assign(static_cast<size_t>(cutoff) + 1, {});
    size_t w = 1;
    for (index_t d = 1; d <= cutoff; ++d) {
      win[static_cast<size_t>(d)].resize(w);
      w = w * static_cast<size_t>(m) + 1;
    }
  }

  // Returns true when a cutoff-depth survivor was found (aborts the search).
  bool walk(index_t depth) {
    ++res.nodes;
    if (depth > res.rank) res.rank = depth;
    if (depth == cutoff) {
      res.exceeded = true;
      res.witness = assignment;
      return true;
    }
    const std::vector<index_t>& window = win[static_cast<size_t>(depth)];
    std::vector<index_t>& child = win[static_cast<size_t>(depth) + 1];
    for (long long cs : domain) {
      child[0] = cs;
      index_t acc = cs;
      bool alive = true;
      size_t i = 0;
      for (index_t g : window) {  // parent entry g feeds m consecutive children
        for (index_t rep = 0; rep < m; ++rep) {
          acc += g;
          if (acc >= h) acc -= h;
          if (acc == 0) {
            alive = false;
            break;
          }
          child[++i] = acc;
        }
        if (!alive) break;
      }
      if (!alive) continue;
      assignment.push_back(cs);
      if (walk(depth + 1)) return true;
      assignment.pop_back();
    }
    return false;
  }
};

}  // namespace detail

inline rank_result rank_general(index_t m, index_t h, index_t cutoff,
                                assign_domain dom = assign_domain::all_residues) {
  require(m >= 2, errc::invalid_degree, "window step must be at least 2");
  require(h >= 2, errc::domain_error, "modulus must be at least 2");
  require(cutoff >= 1, errc::domain_error, "cutoff must be at least 1");
  const bool even_only = dom == assign_domain::even_residues;
  if (even_only) {
    require(h % 2 == 0, errc::domain_error, "even-residue domain requires an even modulus");
  }
  detail::rank_dfs dfs;
  dfs.m = m;
  dfs.h = h;
  dfs.cutoff = cutoff;
  for (long long v = even_only ? 2 : 1; v < h; v += even_only ? 2 : 1) dfs.domain.push_back(v);
  dfs.res.m = m;
  dfs.res.h = h;
  dfs.res.cutoff = cutoff;
  dfs.prepare();

  for (long long g : detail::divisor_roots(h, even_only)) {
    dfs.assignment.assign(1, g);
    dfs.win[1][0] = g;
    if (dfs.walk(1)) break;
  }
  if (!dfs.res.exceeded) dfs.res.rank += 1;  // deepest survivor + 1
  return dfs.res;
}

inline rank_result rank_constrained_b2(index_t h, index_t cutoff) {
  return rank_general(2, h, cutoff, assign_domain::even_residues);
}

// Rank for each modulus in `hs`, in input order; cells are independent and
// spread across `jobs` threads.
inline std::vector<rank_result> rank_sweep(index_t m, const std::vector<index_t>& hs,
                                           index_t cutoff,
                                           assign_domain dom = assign_domain::all_residues,
                                           unsigned jobs = 1) {
  std::vector<rank_result> out(hs.size());
  if (jobs == 0) jobs = 1;
  if (hs.size() < jobs) jobs = static_cast<unsigned>(std::max<size_t>(hs.size(), 1));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < hs.size(); i = next.fetch_add(1)) {
      out[i] = rank_general(m, hs[i], cutoff, dom);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < jobs; ++w) fs.push_back(std::async(std::launch::async, worker));
    for (auto& f : fs) f.get();
  }
  return out;
}

// A depth-s survivor (canonicalized), or absent when rank <= s.
inline std::optional<std::vector<long long>> witness_assignment(index_t m, index_t h, index_t s) {
  rank_result r = rank_general(m, h, s);
  if (r.exceeded) return r.witness;
  return std::nullopt;
}

// Empirical sweep of the mod-3 quadruple property: for each n in range, 3
// should divide one of b_T(k_n), b_T(k_{k_n+u-1}), b_T(k_{k_n+u}),
// b_T(k_{k_n+u+1}). Violations are reported, not swallowed: the property is
// provable only when block gaps exceed u+1, and the checker runs on any range
// with gaps >= u+1.
inline check_report check_twp3(const triple_spec& T, index_t n_lo, index_t n_hi) {
  require(T.r_sum() % 3 != 0, errc::hypothesis_violated,
          "the quadruple property requires 3 not dividing the sum of right coefficients");
  require(1 <= n_lo && n_lo <= n_hi, errc::domain_error, "bad range");
  for (index_t n = n_lo; n <= n_hi; ++n) {
    require(T.k.gap(n) >= T.u() + 1, errc::hypothesis_violated,
            "block gaps must be at least u+1 in the checked range");
  }
  const index_t u = T.u();
  const index_t top = T.k.at(T.k.at(n_hi) + u + 1);
  mod_evaluator ev(T, mod_ring(3));
  auto v = ev.eval_range(top);

  check_report rep{"quadruple-divisibility-by-3 [" + T.name + "]"};
  for (index_t n = n_lo; n <= n_hi; ++n) {
    ++rep.checked;
    index_t x0 = T.k.at(n);
    index_t idx[4] = {x0, T.k.at(x0 + u - 1), T.k.at(x0 + u), T.k.at(x0 + u + 1)};
    bool hit = false;
    for (index_t j : idx) hit = hit || v[static_cast<size_t>(j)] == 0;
    if (!hit) {
      std::string line = "n=" + std::to_string(n) + ": residues mod 3 = (";
      for (int j = 0; j < 4; ++j)
        line += std::to_string(v[static_cast<size_t>(idx[j])]) + (j < 3 ? "," : ")");
      line += " at indices (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
              std::to_string(idx[2]) + "," + std::to_string(idx[3]) + ")";
      rep.violations.push_back(std::move(line));
    }
  }
  return rep;
}

}  // namespace partlib
