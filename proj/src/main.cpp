// mpart: evaluate block-recurrence sequences, compute digit characterizations,
// rank searches, smallest-solution grids, and run the verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage / input error.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "partlib/partlib.hpp"

namespace {

using namespace partlib;

unsigned default_jobs() {
  if (const char* env = std::getenv("MPART_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

std::pair<index_t, index_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw error(errc::parse_error, "range must look like A..B, got: " + text);
  }
  try {
    index_t lo = std::stoll(text.substr(0, dots));
    index_t hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw error(errc::parse_error, "empty range: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw error(errc::parse_error, "range must look like A..B, got: " + text);
  } catch (const std::out_of_range&) {
    throw error(errc::parse_error, "range endpoint out of range: " + text);
  }
}

family parse_family(const std::string& name) {
  if (name == "b") return family::b;
  if (name == "c") return family::c;
  if (name == "ovb") return family::ovb;
  throw error(errc::parse_error, "unknown family: " + name + " (expected b, c, or ovb)");
}

triple_spec load_triple(const std::string& fam, index_t m, const std::string& triple_path) {
  if (!fam.empty() && !triple_path.empty()) {
    throw error(errc::parse_error, "--family and --triple are mutually exclusive");
  }
  if (!triple_path.empty()) {
    std::ifstream in(triple_path);
    if (!in) throw error(errc::parse_error, "cannot open triple file: " + triple_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return triple_from_json_text(ss.str());
  }
  if (fam.empty()) throw error(errc::parse_error, "one of --family / --triple is required");
  return builtin_triple(parse_family(fam), m);
}

// Writes to --output if given, else stdout; the writer receives one stream.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  fn(out);
  return 0;
}

// ---------------------------------------------------------------- eval ----

struct eval_opts {
  std::string fam, triple_path, format = "plain", output;
  index_t m = 2;
  std::optional<index_t> n;
  std::optional<index_t> range_hi;
  std::optional<index_t> mod;
  bool d_seq = false;
};

int run_eval(const eval_opts& o) {
  triple_spec T = load_triple(o.fam, o.m, o.triple_path);
  if (!o.n && !o.range_hi) throw error(errc::parse_error, "one of --n / --range is required");
  if (o.n && o.range_hi) throw error(errc::parse_error, "--n and --range are mutually exclusive");
  table_format fmt = parse_table_format(o.format == "plain" ? "csv" : o.format);

  index_t lo = o.n ? *o.n : 0;
  index_t hi = o.n ? *o.n : *o.range_hi;
  std::vector<std::pair<index_t, std::string>> rows;
  if (o.mod) {
    mod_evaluator ev(T, mod_ring(static_cast<std::uint64_t>(*o.mod)));
    if (o.d_seq) {
      for (index_t j = lo; j <= hi; ++j) rows.emplace_back(j, std::to_string(ev.eval_d(j)));
    } else if (o.n) {
      rows.emplace_back(lo, std::to_string(ev.eval(lo)));
    } else {
      auto v = ev.eval_range(hi);
      for (index_t j = lo; j <= hi; ++j)
        rows.emplace_back(j, std::to_string(v[static_cast<size_t>(j)]));
    }
  } else {
    exact_evaluator ev(T);
    if (o.d_seq) {
      for (index_t j = lo; j <= hi; ++j) rows.emplace_back(j, ev.eval_d(j).str());
    } else if (o.n) {
      rows.emplace_back(lo, ev.eval(lo).str());
    } else {
      auto v = ev.eval_range(hi);
      for (index_t j = lo; j <= hi; ++j) rows.emplace_back(j, v[static_cast<size_t>(j)].str());
    }
  }

  return with_output(o.output, [&](std::ostream& os) {
    if (o.format == "plain") {
      if (o.n) {
        os << rows[0].second << '\n';
      } else {
        for (auto& [j, v] : rows) os << j << ' ' << v << '\n';
      }
    } else if (fmt == table_format::csv) {
      os << "n,value\n";
      for (auto& [j, v] : rows) os << j << ',' << v << '\n';
    } else if (fmt == table_format::md) {
      os << "| n | value |\n|---|---|\n";
      for (auto& [j, v] : rows) os << "| " << j << " | " << v << " |\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (auto& [j, v] : rows) arr.push_back({{"n", j}, {"value", v}});
      os << arr.dump(2) << '\n';
    }
  });
}

// ---------------------------------------------------------------- char ----

struct char_opts {
  std::string fam = "b", modulus = "m", output;
  index_t m = 2;
  index_t n = 0;
};

int run_char(const char_opts& o) {
  family f = parse_family(o.fam);
  std::uint64_t value = 0, mod_used = 0;
  if (f == family::b && o.modulus == "m") {
    value = char_b_mod_m(o.m, o.n);
    mod_used = static_cast<std::uint64_t>(o.m);
  } else if (f == family::b && o.modulus == "mu2") {
    value = char_b_mod_mu2(o.m, o.n);
    mod_used = mu2(o.m);
  } else if (f == family::c && o.modulus == "m") {
    value = char_c_mod_m(o.m, o.n);
    mod_used = static_cast<std::uint64_t>(o.m);
  } else if (f == family::ovb && o.modulus == "m") {
    value = char_ovb_mod_m(o.m, o.n);
    mod_used = static_cast<std::uint64_t>(o.m);
  } else if (f == family::ovb && o.modulus == "m2") {
    value = char_ovb_mod_m2(o.m, o.n);
    mod_used = static_cast<std::uint64_t>(o.m) * static_cast<std::uint64_t>(o.m);
  } else if (f == family::ovb && o.modulus == "2m") {
    value = char_ovb_mod_2m(o.m, o.n);
    mod_used = 2 * static_cast<std::uint64_t>(o.m);
  } else {
    throw error(errc::parse_error,
                "no digit characterization for family " + o.fam + " at modulus " + o.modulus);
  }
  return with_output(o.output, [&](std::ostream& os) {
    os << value << " (mod " << mod_used << ")\n";
  });
}

// ---------------------------------------------------------------- rank ----

struct rank_opts {
  std::string format = "plain", output, h_range, emit;
  index_t m = 2;
  std::optional<index_t> h;
  index_t cutoff = 13;
  bool constrained_even = false;
  bool witness = false;
  unsigned jobs = 1;
};

int run_rank(const rank_opts& o) {
  // --emit is shorthand for the common output shapes: "value" is the plain
  // default, "witness" implies --witness, "table" forces tabular output even
  // for a single modulus.
  bool want_witness = o.witness;
  bool force_table = false;
  if (!o.emit.empty()) {
    if (o.emit == "witness") {
      want_witness = true;
    } else if (o.emit == "table") {
      force_table = true;
    } else if (o.emit != "value") {
      throw error(errc::parse_error, "--emit must be value, witness, or table");
    }
  }
  assign_domain dom =
      o.constrained_even ? assign_domain::even_residues : assign_domain::all_residues;
  if (!o.h && o.h_range.empty())
    throw error(errc::parse_error, "one of --h / --h-range is required");
  if (o.h && !o.h_range.empty())
    throw error(errc::parse_error, "--h and --h-range are mutually exclusive");

  std::vector<index_t> hs;
  if (o.h) {
    hs.push_back(*o.h);
  } else {
    auto [lo, hi] = parse_range(o.h_range);
    for (index_t h = lo; h <= hi; ++h) {
      if (dom == assign_domain::even_residues && h % 2 != 0) continue;
      hs.push_back(h);
    }
  }
  auto rows = rank_sweep(o.m, hs, o.cutoff, dom, o.jobs);

  return with_output(o.output, [&](std::ostream& os) {
    if (o.h && o.format == "plain" && !force_table) {
      os << rows[0].display() << '\n';
      if (want_witness && rows[0].exceeded) {
        os << "witness:";
        for (auto v : rows[0].witness) os << ' ' << v;
        os << '\n';
      }
      return;
    }
    emit_rank_table(os, rows, parse_table_format(o.format == "plain" ? "md" : o.format));
  });
}

// -------------------------------------------------------------- search ----

struct search_opts {
  std::string fam = "b", format = "csv", output, m_range = "3..12";
  index_t bound = 10000;
  unsigned jobs = 1;
};

int run_search(const search_opts& o) {
  auto [lo, hi] = parse_range(o.m_range);
  auto rep = appendix_table(parse_family(o.fam), lo, hi, o.bound, o.jobs);
  return with_output(o.output, [&](std::ostream& os) {
    emit_search_table(os, rep, parse_table_format(o.format));
  });
}

// --------------------------------------------------------------- table ----

struct table_opts {
  std::string which = "a", format = "csv", output;
  unsigned jobs = 1;
};

int run_table(const table_opts& o) {
  table_format fmt = parse_table_format(o.format);
  if (o.which == "a" || o.which == "b") {
    search_opts so;
    so.fam = (o.which == "a") ? "b" : "c";
    so.format = o.format;
    so.output = o.output;
    so.jobs = o.jobs;
    return run_search(so);
  }
  if (o.which != "c") throw error(errc::parse_error, "--appendix must be a, b, or c");

  std::vector<index_t> h1, h2, h3;
  for (index_t h = 3; h <= 41; ++h) h1.push_back(h);
  for (index_t h = 4; h <= 76; h += 8) h2.push_back(h);
  for (index_t h = 3; h <= 50; ++h) h3.push_back(h);
  auto col1 = rank_sweep(2, h1, 13, assign_domain::all_residues, o.jobs);
  auto col2 = rank_sweep(2, h2, 13, assign_domain::even_residues, o.jobs);
  auto col3 = rank_sweep(3, h3, 9, assign_domain::all_residues, o.jobs);

  return with_output(o.output, [&](std::ostream& os) {
    if (fmt == table_format::json) {
      std::ostringstream s1, s2, s3;
      emit_rank_table(s1, col1, fmt);
      emit_rank_table(s2, col2, fmt);
      emit_rank_table(s3, col3, fmt);
      os << "{\n\"rank_step2\": " << s1.str() << ",\n\"even_rank_step2\": " << s2.str()
         << ",\n\"rank_step3\": " << s3.str() << "}\n";
      return;
    }
    const char* cm = (fmt == table_format::csv) ? "# " : "### ";
    os << cm << "rank, step 2, cutoff 13\n";
    emit_rank_table(os, col1, fmt);
    os << '\n' << cm << "even-restricted rank, step 2, cutoff 13\n";
    emit_rank_table(os, col2, fmt);
    os << '\n' << cm << "rank, step 3, cutoff 9\n";
    emit_rank_table(os, col3, fmt);
  });
}

// -------------------------------------------------------------- verify ----

int report_and_tally(const check_report& rep, int& failures) {
  std::cout << (rep.ok() ? "ok   " : "FAIL ") << rep.name << ": " << rep.checked << " checked, "
            << rep.violations.size() << " violations\n";
  size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 10) {
      std::cout << "       ... " << (rep.violations.size() - 10) << " more\n";
      break;
    }
    std::cout << "       " << v << '\n';
  }
  if (!rep.ok()) ++failures;
  return rep.ok() ? 0 : 1;
}

int verify_oracles() {
  int failures = 0;
  for (index_t m = 2; m <= 5; ++m) {
    check_report rep{"recurrence vs partition-count oracle, base " + std::to_string(m)};
    exact_evaluator evb(builtin_triple(family::b, m));
    exact_evaluator evc(builtin_triple(family::c, m));
    auto vb = evb.eval_range(200);
    auto vc = evc.eval_range(200);
    auto ob = count_mary_range(m, 200);
    for (index_t n = 0; n <= 200; ++n) {
      ++rep.checked;
      if (vb[static_cast<size_t>(n)] != ob[static_cast<size_t>(n)])
        rep.violations.push_back("flat-block value differs from count at n=" + std::to_string(n));
      ++rep.checked;
      if (vc[static_cast<size_t>(n)] != count_mary_nogaps(m, n))
        rep.violations.push_back("no-gaps value differs from count at n=" + std::to_string(n));
    }
    // Direct one-line fills must agree with the generic engine (all families).
    auto db = direct_fill_b(m, 200);
    auto dc = direct_fill_c(m, 200);
    auto dv = direct_fill_ovb(m, 200);
    exact_evaluator evv(builtin_triple(family::ovb, m));
    auto vv = evv.eval_range(200);
    for (index_t n = 0; n <= 200; ++n) {
      ++rep.checked;
      if (vb[static_cast<size_t>(n)] != db[static_cast<size_t>(n)] ||
          vc[static_cast<size_t>(n)] != dc[static_cast<size_t>(n)] ||
          vv[static_cast<size_t>(n)] != dv[static_cast<size_t>(n)])
        rep.violations.push_back("direct fill differs from engine at n=" + std::to_string(n));
    }
    report_and_tally(rep, failures);
  }
  return failures;
}

// The digit formulas characterize the value at the scaled index: the flat and
// doubled families at m*n, the no-gaps family at m*n+1.
int verify_char() {
  int failures = 0;
  const index_t n_max = 2000;
  for (index_t m = 2; m <= 12; ++m) {
    check_report rep{"digit characterizations vs direct evaluation, base " + std::to_string(m)};
    const index_t top = m * n_max + 1;
    const std::uint64_t u2 = mu2(m);
    mod_evaluator evb_m(builtin_triple(family::b, m), mod_ring(static_cast<std::uint64_t>(m)));
    mod_evaluator evb_u2(builtin_triple(family::b, m), mod_ring(u2));
    mod_evaluator evc_m(builtin_triple(family::c, m), mod_ring(static_cast<std::uint64_t>(m)));
    mod_evaluator evv_m(builtin_triple(family::ovb, m), mod_ring(static_cast<std::uint64_t>(m)));
    mod_evaluator evv_m2(builtin_triple(family::ovb, m),
                         mod_ring(static_cast<std::uint64_t>(m * m)));
    auto bm = evb_m.eval_range(top);
    auto bu = evb_u2.eval_range(top);
    auto cm = evc_m.eval_range(top);
    auto vm = evv_m.eval_range(top);
    auto v2 = evv_m2.eval_range(top);
    std::vector<std::uint64_t> v2m;
    if (m % 2 == 0) {
      mod_evaluator ev(builtin_triple(family::ovb, m), mod_ring(2 * static_cast<std::uint64_t>(m)));
      v2m = ev.eval_range(top);
    }
    for (index_t n = 0; n <= n_max; ++n) {
      ++rep.checked;
      const size_t mn = static_cast<size_t>(m * n);
      if (char_b_mod_m(m, n) != bm[mn])
        rep.violations.push_back("flat-block mod-m digit product wrong at n=" + std::to_string(n));
      if (char_b_mod_mu2(m, n) != bu[mn])
        rep.violations.push_back("flat-block second-order formula wrong at n=" + std::to_string(n));
      if (n >= 1 && char_c_mod_m(m, n) != cm[mn + 1])
        rep.violations.push_back("no-gaps mod-m recursion wrong at n=" + std::to_string(n));
      if (char_ovb_mod_m(m, n) != vm[mn])
        rep.violations.push_back("doubled mod-m digit product wrong at n=" + std::to_string(n));
      bool zero_free = true;
      for (auto d : digits(n, m)) zero_free = zero_free && d != 0;
      if (zero_free && char_ovb_mod_m2(m, n) != v2[mn])
        rep.violations.push_back("doubled square-modulus formula wrong at n=" + std::to_string(n));
      if (m % 2 == 0 && zero_free && char_ovb_mod_2m(m, n) != v2m[mn])
        rep.violations.push_back("doubled mod-2m formula wrong at n=" + std::to_string(n));
    }
    report_and_tally(rep, failures);
  }
  return failures;
}

int verify_classical() {
  int failures = 0;
  report_and_tally(check_churchhouse(100000), failures);
  report_and_tally(check_rodseth_gupta(4, 99), failures);
  for (index_t m = 2; m <= 6; ++m) report_and_tally(check_andrews_gupta(m, 3, 50), failures);
  return failures;
}

int verify_twp3() {
  int failures = 0;
  for (family f : {family::b, family::c, family::ovb}) {
    for (index_t m = 2; m <= 6; ++m) {
      report_and_tally(check_twp3(builtin_triple(f, m), 1, 500), failures);
    }
  }
  return failures;
}

int verify_coverage() {
  int failures = 0;
  const index_t n_max = 10000;
  for (index_t m = 2; m <= 9; ++m) {
    check_report rep{"residue coverage within the scan bound, base " + std::to_string(m)};
    for (index_t h = 2; h <= m + 1; ++h) {
      for (family f : {family::b, family::c}) {
        ++rep.checked;
        if (!all_classes_seen(residue_coverage(builtin_triple(f, m), h, n_max)))
          rep.violations.push_back(std::string(family_name(f)) +
                                   ": some class mod " + std::to_string(h) + " never appears");
      }
    }
    for (index_t h = 3; h <= m; h += 2) {
      ++rep.checked;
      if (!all_classes_seen(residue_coverage(builtin_triple(family::ovb, m), h, n_max)))
        rep.violations.push_back(std::string("ovb: some class mod ") + std::to_string(h) +
                                 " never appears");
    }
    report_and_tally(rep, failures);
  }
  // Second solutions: for every cell of the smallest-solution grid, another
  // zero past the first one inside the same scan bound.
  check_report rep{"a second solution exists beyond the first, flat-block grid"};
  auto grid = appendix_table(family::b, 3, 12, n_max, default_jobs());
  for (const auto& row : grid.rows) {
    ++rep.checked;
    if (!row.n1) {
      rep.violations.push_back("no first solution for m=" + std::to_string(row.m) +
                               ", p=" + std::to_string(row.p));
      continue;
    }
    mod_evaluator ev(builtin_triple(family::b, row.m),
                     mod_ring(static_cast<std::uint64_t>(row.p)));
    auto v = ev.eval_range(n_max);
    bool second = false;
    for (index_t n = *row.n1 + 1; n <= n_max && !second; ++n)
      second = v[static_cast<size_t>(n)] == 0;
    if (!second)
      rep.violations.push_back("no second solution for m=" + std::to_string(row.m) +
                               ", p=" + std::to_string(row.p) + " within " +
                               std::to_string(n_max));
  }
  report_and_tally(rep, failures);
  return failures;
}

int run_verify(const std::string& suite) {
  int failures = 0;
  if (suite == "oracles" || suite == "all") failures += verify_oracles();
  if (suite == "char" || suite == "all") failures += verify_char();
  if (suite == "classical" || suite == "all") failures += verify_classical();
  if (suite == "twp3" || suite == "all") failures += verify_twp3();
  if (suite == "coverage" || suite == "all") failures += verify_coverage();
  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-recurrence sequence toolkit"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads for table commands (env MPART_JOBS)")
      ->check(CLI::PositiveNumber);

  eval_opts eo;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a sequence value or range");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--family", eo.fam, "built-in family: b, c, or ovb");
  eval_cmd->add_option("--m", eo.m, "base/step for the built-in family");
  eval_cmd->add_option("--triple", eo.triple_path, "JSON triple file instead of --family");
  eval_cmd->add_option("--n", eo.n, "single index to evaluate");
  eval_cmd->add_option("--range", eo.range_hi, "evaluate all indices 0..N");
  eval_cmd->add_option("--mod", eo.mod, "evaluate modulo this number");
  eval_cmd->add_flag("--d", eo.d_seq, "evaluate the companion difference sequence instead");
  eval_cmd->add_option("--format", eo.format, "plain, csv, md, or json");
  eval_cmd->add_option("--output", eo.output, "write to file instead of stdout");

  char_opts co;
  auto* char_cmd = app.add_subcommand("char", "digit characterization of a value's residue");
  char_cmd->fallthrough();
  char_cmd->add_option("--family", co.fam, "built-in family: b, c, or ovb")->required();
  char_cmd->add_option("--m", co.m, "base")->required();
  char_cmd->add_option("--n", co.n, "index")->required();
  char_cmd->add_option("--modulus", co.modulus, "m, mu2, m2, or 2m");
  char_cmd->add_option("--output", co.output, "write to file instead of stdout");

  rank_opts ro;
  auto* rank_cmd = app.add_subcommand("rank", "avoidance rank of a modulus (DFS)");
  // --h is taken by the modulus option, so this subcommand's help keeps only
  // the long spelling.
  rank_cmd->set_help_flag("--help", "print this help message and exit");
  rank_cmd->fallthrough();
  rank_cmd->add_option("--m", ro.m, "window step");
  rank_cmd->add_option("--h", ro.h, "single modulus");
  rank_cmd->add_option("--h-range", ro.h_range, "modulus range A..B");
  rank_cmd->add_option("--cutoff", ro.cutoff, "depth at which the search reports '>cutoff'");
  rank_cmd->add_flag("--constrained-even", ro.constrained_even,
                     "restrict assignments to even residues (even moduli only)");
  rank_cmd->add_flag("--witness", ro.witness, "print the surviving assignment when exceeded");
  rank_cmd->add_option("--emit", ro.emit, "value (default), witness, or table");
  rank_cmd->add_option("--format", ro.format, "plain, csv, md, or json");
  rank_cmd->add_option("--output", ro.output, "write to file instead of stdout");

  search_opts so;
  auto* search_cmd = app.add_subcommand("search", "smallest-solution grid over (m, p) cells");
  search_cmd->fallthrough();
  search_cmd->add_option("--family", so.fam, "built-in family: b, c, or ovb");
  search_cmd->add_option("--m-range", so.m_range, "base range A..B");
  search_cmd->add_option("--bound", so.bound, "scan bound for each cell");
  search_cmd->add_option("--format", so.format, "csv, md, or json");
  search_cmd->add_option("--output", so.output, "write to file instead of stdout");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
  verify_cmd->fallthrough();
  verify_cmd->add_option("suite", suite, "oracles, char, classical, twp3, coverage, or all")
      ->check(CLI::IsMember({"oracles", "char", "classical", "twp3", "coverage", "all"}));

  table_opts to;
  auto* table_cmd = app.add_subcommand("table", "emit a full reference-style table");
  table_cmd->fallthrough();
  table_cmd->add_option("--appendix", to.which, "a (flat-block grid), b (no-gaps grid), c (ranks)")
      ->required();
  table_cmd->add_option("--format", to.format, "csv, md, or json");
  table_cmd->add_option("--output", to.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ro.jobs = jobs;
    so.jobs = jobs;
    to.jobs = jobs;
    if (eval_cmd->parsed()) return run_eval(eo);
    if (char_cmd->parsed()) return run_char(co);
    if (rank_cmd->parsed()) return run_rank(ro);
    if (search_cmd->parsed()) return run_search(so);
    if (verify_cmd->parsed()) return run_verify(suite);
    if (table_cmd->parsed()) return run_table(to);
  } catch (const partlib::error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
