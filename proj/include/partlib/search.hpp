// Congruence-solution searches and empirical checkers: smallest-zero tables
// over (base, prime) grids, residue-coverage histograms, the divisibility
// trichotomy classifier, and three classical congruence validators for the
// powers-of-m partition counts.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "partlib/eval.hpp"
#include "partlib/report.hpp"
#include "partlib/triple.hpp"

namespace partlib {

inline std::vector<index_t> sieve_primes(index_t limit) {
  require(limit >= 2, errc::domain_error, "sieve limit must be at least 2");
  std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
  std::vector<index_t> out;
  for (index_t p = 2; p <= limit; ++p) {
    if (comp[static_cast<size_t>(p)]) continue;
    out.push_back(p);
    for (index_t q = p * p; q <= limit; q += p) comp[static_cast<size_t>(q)] = true;
  }
  return out;
}

// Least 1 <= n <= n_max with b_T(n) == 0 mod h, by one forward modular pass.
inline std::optional<index_t> smallest_zero(const triple_spec& T, index_t h, index_t n_max) {
  require(h >= 2, errc::domain_error, "modulus must be at least 2");
  require(n_max >= 1, errc::domain_error, "bound must be at least 1");
  mod_evaluator ev(T, mod_ring(static_cast<std::uint64_t>(h)));
  auto v = ev.eval_range(n_max);
  for (index_t n = 1; n <= n_max; ++n) {
    if (v[static_cast<size_t>(n)] == 0) return n;
  }
  return std::nullopt;
}

struct search_row {
  index_t m;
  index_t p;
  std::optional<index_t> n1;
  index_t bound;
};

struct search_report {
  family fam = family::b;
  std::vector<search_row> rows;  // sorted by (m, p)
};

// For every base in [m_lo, m_hi] and every prime p in [m+2, m^2+m+1], the
// smallest index with family value == 0 mod p. Cells are independent and run
// across `jobs` threads; assembly order is fixed by the (m, p) grid.
inline search_report appendix_table(family fam, index_t m_lo, index_t m_hi, index_t n_max,
                                    unsigned jobs = 1) {
  require(2 <= m_lo && m_lo <= m_hi, errc::domain_error, "bad base range");
  std::vector<std::pair<index_t, index_t>> cells;
  auto primes = sieve_primes(m_hi * m_hi + m_hi + 1);
  for (index_t m = m_lo; m <= m_hi; ++m) {
    for (index_t p : primes) {
      if (p >= m + 2 && p <= m * m + m + 1) cells.emplace_back(m, p);
    }
  }
  search_report rep;
  rep.fam = fam;
  rep.rows.resize(cells.size());
  if (jobs == 0) jobs = 1;
  if (cells.size() < jobs) jobs = static_cast<unsigned>(std::max<size_t>(cells.size(), 1));

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      auto [m, p] = cells[i];
      rep.rows[i] = {m, p, smallest_zero(builtin_triple(fam, m), p, n_max), n_max};
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < jobs; ++w) fs.push_back(std::async(std::launch::async, worker));
    for (auto& f : fs) f.get();
  }
  return rep;
}

// Histogram of b_T(n) mod h over 0 <= n <= N.
inline std::vector<unsigned long long> residue_coverage(const triple_spec& T, index_t h,
                                                        index_t N) {
  require(h >= 2, errc::domain_error, "modulus must be at least 2");
  mod_evaluator ev(T, mod_ring(static_cast<std::uint64_t>(h)));
  auto v = ev.eval_range(N);
  std::vector<unsigned long long> hist(static_cast<size_t>(h), 0);
  for (auto r : v) ++hist[static_cast<size_t>(r)];
  return hist;
}

inline bool all_classes_seen(const std::vector<unsigned long long>& hist) {
  return std::all_of(hist.begin(), hist.end(), [](unsigned long long c) { return c > 0; });
}

enum class trichotomy { all_divisible, all_non_coprime, all_classes_seen, inconclusive };

inline const char* trichotomy_name(trichotomy t) {
  switch (t) {
    case trichotomy::all_divisible: return "AllDivisible";
    case trichotomy::all_non_coprime: return "AllNonCoprime";
    case trichotomy::all_classes_seen: return "AllClassesSeen";
    case trichotomy::inconclusive: return "Inconclusive";
  }
  return "?";
}

struct trichotomy_verdict {
  index_t h = 2;
  index_t scanned = 0;
  trichotomy verdict = trichotomy::inconclusive;
  std::vector<unsigned long long> class_counts;
};

// Evidence-only classification of the scanned prefix: every value divisible;
// every value sharing a factor with h (but not all divisible); every residue
// class present; or none of these.
inline trichotomy_verdict classify_trichotomy(const triple_spec& T, index_t h, index_t N) {
  trichotomy_verdict out;
  out.h = h;
  out.scanned = N;
  out.class_counts = residue_coverage(T, h, N);
  const unsigned long long total =
      std::accumulate(out.class_counts.begin(), out.class_counts.end(), 0ULL);
  if (out.class_counts[0] == total) {
    out.verdict = trichotomy::all_divisible;
    return out;
  }
  bool all_share = true;
  for (index_t r = 0; r < h; ++r) {
    if (out.class_counts[static_cast<size_t>(r)] > 0 && std::gcd(r, h) == 1) {
      all_share = false;
      break;
    }
  }
  if (all_share) {
    out.verdict = trichotomy::all_non_coprime;
  } else if (all_classes_seen(out.class_counts)) {
    out.verdict = trichotomy::all_classes_seen;
  } else {
    out.verdict = trichotomy::inconclusive;
  }
  return out;
}

// Classical checks for the binary/m-ary partition counts. Each reports
// violations instead of asserting, so known-failing parameter points can be
// exercised deliberately.

// b_2(n) is even and not divisible by 8 for 2 <= n <= N.
inline check_report check_churchhouse(index_t N) {
  require(N >= 2, errc::domain_error, "need N >= 2");
  mod_evaluator ev(builtin_triple(family::b, 2), mod_ring(8));
  auto v = ev.eval_range(N);
  check_report rep{"binary partition values mod 8 in {2,4,6} from n=2 on"};
  for (index_t n = 2; n <= N; ++n) {
    ++rep.checked;
    auto r = v[static_cast<size_t>(n)];
    if (!(r == 2 || r == 4 || r == 6)) {
      rep.violations.push_back("n=" + std::to_string(n) + ": b_2(n) mod 8 = " + std::to_string(r));
    }
  }
  return rep;
}

// b_2(2^{s+2} n) - b_2(2^s n) == 2^{mu(s)} mod 2^{mu(s)+1}, mu(s) = floor((3s+4)/2),
// for s in [s_min, s_max] and odd n <= n_max_odd. The identity is false at
// s = 0 (e.g. n = 1 gives difference 3), so sweeps default to s_min = 1; pass
// s_min = 0 to observe the failing row.
inline check_report check_rodseth_gupta(index_t s_max, index_t n_max_odd, index_t s_min = 1) {
  require(s_max >= 0 && s_min >= 0, errc::domain_error, "s range must be non-negative");
  require(n_max_odd >= 1, errc::domain_error, "need at least n = 1");
  exact_evaluator ev(builtin_triple(family::b, 2));
  index_t top = (1LL << (s_max + 2)) * n_max_odd;
  auto v = ev.eval_range(top);
  check_report rep{"power-of-two partition difference congruences"};
  for (index_t s = s_min; s <= s_max; ++s) {
    index_t mu = (3 * s + 4) / 2;
    bigint mod = bigint(1) << mu;      // 2^mu
    bigint mod2 = mod << 1;            // 2^{mu+1}
    for (index_t n = 1; n <= n_max_odd; n += 2) {
      ++rep.checked;
      bigint diff = v[static_cast<size_t>((1LL << (s + 2)) * n)] -
                    v[static_cast<size_t>((1LL << s) * n)];
      bigint rem = diff % mod2;
      if (rem < 0) rem += mod2;
      if (rem != mod) {
        rep.violations.push_back("s=" + std::to_string(s) + ", n=" + std::to_string(n) +
                                 ": difference != 2^" + std::to_string(mu) + " mod 2^" +
                                 std::to_string(mu + 1));
      }
    }
  }
  return rep;
}

// b_m(m^{r+1} n) == b_m(m^r n) mod m^r / gamma_r, gamma_r = 1 for odd m and
// 2^{r-1} for even m, for 1 <= r <= r_max and 1 <= n <= n_max.
inline check_report check_andrews_gupta(index_t m, index_t r_max, index_t n_max) {
  require(m >= 2, errc::invalid_degree, "base must be at least 2");
  require(r_max >= 1 && n_max >= 1, errc::domain_error, "need r_max, n_max >= 1");
  exact_evaluator ev(builtin_triple(family::b, m));
  index_t mpow = m;
  for (index_t r = 1; r <= r_max; ++r) mpow *= m;  // m^{r_max+1}
  auto v = ev.eval_range(mpow * n_max);
  check_report rep{"base-power lifting congruences, m=" + std::to_string(m)};
  index_t mr = 1;
  for (index_t r = 1; r <= r_max; ++r) {
    mr *= m;  // m^r
    bigint gamma = (m % 2 == 0) ? (bigint(1) << (r - 1)) : bigint(1);
    bigint mod = bigint(mr) / gamma;
    for (index_t n = 1; n <= n_max; ++n) {
      ++rep.checked;
      bigint diff = v[static_cast<size_t>(mr * m * n)] - v[static_cast<size_t>(mr * n)];
      if (diff % mod != 0) {
        rep.violations.push_back("m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                                 ", n=" + std::to_string(n) + ": lifting congruence fails");
      }
    }
  }
  return rep;
}

}  // namespace partlib
