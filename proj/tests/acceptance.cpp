// End-to-end acceptance suite. Each numbered check recomputes one headline
// result from scratch and compares it against the checked-in reference
// tables at zero tolerance, printing one PASS/FAIL line plus a detail line
// for every disagreement. The process exits nonzero when any executed check
// fails.
//
// Usage: acceptance [N]   with N in 1..10; all checks run when N is omitted.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "level_fixture.hpp"
#include "partlib/partlib.hpp"
#include "reference_tables.hpp"

using namespace partlib;

namespace {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string line) {
    pass = false;
    details.push_back(std::move(line));
  }
};

void emit(int id, const std::string& title, const outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title;
  if (!o.summary.empty()) std::cout << ": " << o.summary;
  std::cout << '\n';
  const size_t cap = 15;
  for (size_t i = 0; i < o.details.size() && i < cap; ++i) {
    std::cout << "      " << o.details[i] << '\n';
  }
  if (o.details.size() > cap) {
    std::cout << "      ... " << (o.details.size() - cap) << " more\n";
  }
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", s);
  return buf;
}

// ---- 1, 2: smallest-zero grid reproduction ---------------------------------

template <size_t N>
outcome check_grid(family fam, const reference::grid_row (&table)[N], double budget_s) {
  outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = appendix_table(fam, 3, 12, 10000, worker_count());
  double secs = seconds_since(t0);

  if (rep.rows.size() != N) {
    o.fail("row count: computed " + std::to_string(rep.rows.size()) + ", table " +
           std::to_string(N));
    o.summary = "grid shape disagrees";
    return o;
  }
  size_t match = 0;
  for (size_t i = 0; i < N; ++i) {
    const auto& want = table[i];
    const auto& got = rep.rows[i];
    if (got.m != want.m || got.p != want.p) {
      o.fail("cell order: computed (m=" + std::to_string(got.m) + ", p=" + std::to_string(got.p) +
             "), table (m=" + std::to_string(want.m) + ", p=" + std::to_string(want.p) + ")");
      continue;
    }
    if (got.n1 && *got.n1 == want.n1) {
      ++match;
    } else {
      std::string computed = got.n1 ? std::to_string(*got.n1) : "none within 10000";
      o.fail("m=" + std::to_string(want.m) + " p=" + std::to_string(want.p) + ": computed " +
             computed + ", table " + std::to_string(want.n1));
    }
  }
  if (secs >= budget_s) {
    o.fail("runtime " + fmt_secs(secs) + " s over the " + fmt_secs(budget_s) + " s budget");
  }
  o.summary = std::to_string(match) + " of " + std::to_string(N) + " cells match; " +
              fmt_secs(secs) + " s (budget " + fmt_secs(budget_s) + " s)";
  return o;
}

// ---- 3: rank table columns -------------------------------------------------

std::string rank_fixture_display(const reference::rank_row& r) {
  return r.exceeds ? (">" + std::to_string(r.rank)) : std::to_string(r.rank);
}

outcome check_rank_columns() {
  outcome o;
  auto t0 = std::chrono::steady_clock::now();
  unsigned jobs = worker_count();

  std::vector<index_t> h1, h2, h3;
  for (index_t h = 3; h <= 41; ++h) h1.push_back(h);
  for (index_t h = 4; h <= 76; h += 8) h2.push_back(h);
  for (index_t h = 3; h <= 50; ++h) h3.push_back(h);
  auto col1 = rank_sweep(2, h1, 13, assign_domain::all_residues, jobs);
  auto col2 = rank_sweep(2, h2, 13, assign_domain::even_residues, jobs);
  auto col3 = rank_sweep(3, h3, 9, assign_domain::all_residues, jobs);
  double secs = seconds_since(t0);

  size_t m1 = 0, m2 = 0, m3 = 0;
  for (size_t i = 0; i < col1.size(); ++i) {
    const auto& want = reference::rank_step2[i];
    const auto& got = col1[i];
    bool same = got.exceeded == want.exceeds && (want.exceeds || got.rank == want.rank);
    if (same) {
      ++m1;
    } else {
      o.fail("step 2, h=" + std::to_string(want.h) + ": computed " + got.display() + ", table " +
             rank_fixture_display(want));
    }
  }
  for (size_t i = 0; i < col2.size(); ++i) {
    const auto& want = reference::even_rank_bounds_step2[i];
    const auto& got = col2[i];
    if (!got.exceeded && got.rank <= want.bound) {
      ++m2;
    } else {
      o.fail("step 2 even, h=" + std::to_string(want.h) + ": computed " + got.display() +
             " above the table bound " + std::to_string(want.bound));
    }
  }
  for (size_t i = 0; i < col3.size(); ++i) {
    const auto& want = reference::rank_step3[i];
    const auto& got = col3[i];
    bool same = got.exceeded == want.exceeds && (want.exceeds || got.rank == want.rank);
    if (same) {
      ++m3;
    } else {
      o.fail("step 3, h=" + std::to_string(want.h) + ": computed " + got.display() + ", table " +
             rank_fixture_display(want));
    }
  }
  if (secs >= 600.0) {
    o.fail("runtime " + fmt_secs(secs) + " s over the 600 s budget");
  }
  o.summary = "step-2 column " + std::to_string(m1) + "/39, even column " + std::to_string(m2) +
              "/10 within bounds, step-3 column " + std::to_string(m3) + "/48; " + fmt_secs(secs) +
              " s (budget 600 s)";
  return o;
}

// ---- 4: level-window golden fixture ----------------------------------------

outcome check_level_fixture() {
  outcome o;
  auto levels = build_levels(2, 0, 4);
  const auto& fixture = reference::level_golden_step2;
  if (levels.size() != 4 || levels[3].entries.size() != fixture.size()) {
    o.fail("tower shape: expected 4 levels with " + std::to_string(fixture.size()) +
           " cumulative entries");
    o.summary = "tower shape disagrees";
    return o;
  }
  size_t match = 0;
  for (size_t i = 0; i < fixture.size(); ++i) {
    const auto& g = fixture[i];
    const auto& e = levels[3].entries[i];
    bool same = e.offset == g.offset && e.index_coe == g.index_coe &&
                e.index_const == g.index_const && e.form.coeff.size() == 4;
    for (size_t v = 0; same && v < 4; ++v) {
      long long want = v < g.coeff.size() ? g.coeff[v] : 0;
      same = e.form.coeff[v] == want;
    }
    if (same) {
      ++match;
    } else {
      o.fail("entry " + std::to_string(i) + " (level " + std::to_string(g.level) + ", offset " +
             std::to_string(g.offset) + ") disagrees with the fixture");
    }
  }
  o.summary = std::to_string(match) + " of " + std::to_string(fixture.size()) +
              " window entries identical";
  return o;
}

// ---- 5: brute-force oracle equivalence -------------------------------------

outcome check_oracles() {
  outcome o;
  const index_t top = 200;
  long long checked = 0;
  for (index_t m = 2; m <= 5; ++m) {
    exact_evaluator evb(builtin_triple(family::b, m));
    auto eng_b = evb.eval_range(top);
    auto brute_b = count_mary_range(m, top);
    exact_evaluator evc(builtin_triple(family::c, m));
    auto eng_c = evc.eval_range(top);
    for (index_t n = 0; n <= top; ++n) {
      ++checked;
      if (eng_b[static_cast<size_t>(n)] != brute_b[static_cast<size_t>(n)]) {
        o.fail("flat-block m=" + std::to_string(m) + ", n=" + std::to_string(n) +
               ": recurrence " + eng_b[static_cast<size_t>(n)].str() + ", brute force " +
               brute_b[static_cast<size_t>(n)].str());
      }
      ++checked;
      bigint brute_c = count_mary_nogaps(m, n);
      if (eng_c[static_cast<size_t>(n)] != brute_c) {
        o.fail("no-gaps m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": recurrence " +
               eng_c[static_cast<size_t>(n)].str() + ", brute force " + brute_c.str());
      }
    }
  }
  o.summary = std::to_string(checked) + " values compared against brute-force counts";
  return o;
}

// ---- 6: digit characterization sweeps --------------------------------------

outcome check_characterizations() {
  outcome o;
  const index_t n_max = 2000;
  long long checked = 0;
  for (index_t m = 2; m <= 12; ++m) {
    const index_t top = m * n_max + 1;
    auto bm = mod_evaluator(builtin_triple(family::b, m), mod_ring(static_cast<std::uint64_t>(m)))
                  .eval_range(top);
    auto bu = mod_evaluator(builtin_triple(family::b, m),
                            mod_ring(static_cast<std::uint64_t>(mu2(m))))
                  .eval_range(top);
    auto cm = mod_evaluator(builtin_triple(family::c, m), mod_ring(static_cast<std::uint64_t>(m)))
                  .eval_range(top);
    auto vm = mod_evaluator(builtin_triple(family::ovb, m),
                            mod_ring(static_cast<std::uint64_t>(m)))
                  .eval_range(top);
    auto v2 = mod_evaluator(builtin_triple(family::ovb, m),
                            mod_ring(static_cast<std::uint64_t>(m * m)))
                  .eval_range(top);
    std::vector<std::uint64_t> v2m;
    if (m % 2 == 0) {
      v2m = mod_evaluator(builtin_triple(family::ovb, m),
                          mod_ring(static_cast<std::uint64_t>(2 * m)))
                .eval_range(top);
    }
    for (index_t n = 0; n <= n_max; ++n) {
      const auto mn = static_cast<size_t>(m * n);
      auto miss = [&](const char* what, long long got, std::uint64_t want) {
        o.fail(std::string(what) + " at m=" + std::to_string(m) + ", n=" + std::to_string(n) +
               ": digits give " + std::to_string(got) + ", sequence gives " +
               std::to_string(want));
      };
      ++checked;
      if (char_b_mod_m(m, n) != static_cast<long long>(bm[mn]))
        miss("flat-block mod m", char_b_mod_m(m, n), bm[mn]);
      ++checked;
      if (char_b_mod_mu2(m, n) != static_cast<long long>(bu[mn]))
        miss("flat-block second order", char_b_mod_mu2(m, n), bu[mn]);
      if (n >= 1) {
        ++checked;
        if (char_c_mod_m(m, n) != static_cast<long long>(cm[mn + 1]))
          miss("no-gaps mod m", char_c_mod_m(m, n), cm[mn + 1]);
      }
      ++checked;
      if (char_ovb_mod_m(m, n) != static_cast<long long>(vm[mn]))
        miss("two-step mod m", char_ovb_mod_m(m, n), vm[mn]);
      bool zero_free = true;
      for (auto d : digits(n, m)) zero_free = zero_free && d != 0;
      if (zero_free) {
        ++checked;
        if (char_ovb_mod_m2(m, n) != static_cast<long long>(v2[mn]))
          miss("two-step mod m^2", char_ovb_mod_m2(m, n), v2[mn]);
        if (m % 2 == 0) {
          ++checked;
          if (char_ovb_mod_2m(m, n) != static_cast<long long>(v2m[mn]))
            miss("two-step mod 2m", char_ovb_mod_2m(m, n), v2m[mn]);
        }
      }
    }
  }
  o.summary = std::to_string(checked) + " residues compared, m up to 12, n up to 2000";
  return o;
}

// ---- 7: composed-head block-sum identity ------------------------------------

outcome check_head_identity() {
  outcome o;
  long long checked = 0;
  for (family fam : {family::b, family::c, family::ovb}) {
    for (index_t m : {2, 3, 4}) {
      auto T = builtin_triple(fam, m);
      exact_evaluator ev(T);
      auto ctx = detail::check_head_identity_hypotheses(T);
      for (index_t n = std::max<index_t>(ctx.n0, 1); n <= 30; ++n) {
        for (index_t q = 0; q < m; ++q) {
          ++checked;
          bigint direct = ev.eval_at_head(T.k.at(n) + q);
          bigint rhs = lemchar_rhs(ev, n, q);
          if (rhs != direct) {
            o.fail(std::string(family_name(fam)) + " m=" + std::to_string(m) + ", n=" +
                   std::to_string(n) + ", q=" + std::to_string(q) + ": block sums give " +
                   rhs.str() + ", direct evaluation " + direct.str());
          }
        }
      }
    }
  }
  o.summary = std::to_string(checked) + " exact block-sum identities";
  return o;
}

// ---- 8: classical congruence checkers --------------------------------------

outcome check_classical() {
  outcome o;
  std::vector<check_report> reps;
  reps.push_back(check_churchhouse(100000));
  reps.push_back(check_rodseth_gupta(4, 99));
  for (index_t m = 2; m <= 6; ++m) reps.push_back(check_andrews_gupta(m, 3, 50));

  long long checked = 0;
  for (const auto& rep : reps) {
    checked += rep.checked;
    if (!rep.ok()) {
      for (const auto& v : rep.violations) o.fail(rep.name + ": " + v);
    }
  }
  o.summary = std::to_string(checked) + " congruences across " + std::to_string(reps.size()) +
              " checkers";
  return o;
}

// ---- 9: divisibility-by-3 quadruple sweep -----------------------------------

outcome check_quadruples() {
  outcome o;
  long long checked = 0;
  for (family fam : {family::b, family::c, family::ovb}) {
    for (index_t m = 2; m <= 6; ++m) {
      auto rep = check_twp3(builtin_triple(fam, m), 1, 500);
      checked += rep.checked;
      if (!rep.ok()) {
        for (const auto& v : rep.violations) {
          o.fail(std::string(family_name(fam)) + " m=" + std::to_string(m) + ": " + v);
        }
      }
    }
  }
  o.summary = std::to_string(checked) + " quadruples scanned, three families, m up to 6";
  return o;
}

// ---- 10: residue coverage and repeated zeros --------------------------------

outcome check_coverage() {
  outcome o;
  const index_t N = 10000;
  long long checked = 0;
  for (index_t m = 2; m <= 9; ++m) {
    for (family fam : {family::b, family::c}) {
      for (index_t h = 2; h <= m + 1; ++h) {
        ++checked;
        if (!all_classes_seen(residue_coverage(builtin_triple(fam, m), h, N))) {
          o.fail(std::string(family_name(fam)) + " m=" + std::to_string(m) + ", h=" +
                 std::to_string(h) + ": some residue class missing below " + std::to_string(N));
        }
      }
    }
    for (index_t h = 3; h <= m; h += 2) {
      ++checked;
      if (!all_classes_seen(residue_coverage(builtin_triple(family::ovb, m), h, N))) {
        o.fail("two-step m=" + std::to_string(m) + ", h=" + std::to_string(h) +
               ": some residue class missing below " + std::to_string(N));
      }
    }
  }

  // Every grid cell must have a second divisible index beyond the first.
  for (const auto& cell : reference::grid_b) {
    ++checked;
    mod_evaluator ev(builtin_triple(family::b, cell.m),
                     mod_ring(static_cast<std::uint64_t>(cell.p)));
    auto v = ev.eval_range(N);
    index_t first = 0, second = 0;
    for (index_t n = 1; n <= N && second == 0; ++n) {
      if (v[static_cast<size_t>(n)] == 0) {
        if (first == 0) {
          first = n;
        } else {
          second = n;
        }
      }
    }
    if (second == 0) {
      o.fail("m=" + std::to_string(cell.m) + " p=" + std::to_string(cell.p) +
             ": fewer than two divisible indices below " + std::to_string(N));
    }
  }
  o.summary = std::to_string(checked) + " coverage and repetition scans";
  return o;
}

struct criterion {
  int id;
  const char* title;
  outcome (*run)();
};

outcome run_grid_b() { return check_grid(family::b, reference::grid_b, 60.0); }
outcome run_grid_c() { return check_grid(family::c, reference::grid_c, 60.0); }

const criterion criteria[] = {
    {1, "flat-block smallest-zero grid reproduction", run_grid_b},
    {2, "no-gaps smallest-zero grid reproduction", run_grid_c},
    {3, "rank table columns", check_rank_columns},
    {4, "level-window golden fixture", check_level_fixture},
    {5, "brute-force oracle equivalence", check_oracles},
    {6, "digit characterization sweeps", check_characterizations},
    {7, "composed-head block-sum identity", check_head_identity},
    {8, "classical congruence checkers", check_classical},
    {9, "divisibility-by-3 quadruple sweep", check_quadruples},
    {10, "residue coverage and repeated zeros", check_coverage},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::cerr << "usage: acceptance [1..10]\n";
      return 2;
    }
  }
  bool any_fail = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
      o.summary = "aborted";
    }
    emit(c.id, c.title, o);
    any_fail = any_fail || !o.pass;
  }
  return any_fail ? 1 : 0;
}
