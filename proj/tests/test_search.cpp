// Tests for the search module: prime sieve, smallest-zero scans pinned to
// independently computed values, the (base, prime) grid builder and its
// thread-count invariance, residue-coverage histograms, the divisibility
// trichotomy classifier, and the three classical congruence checkers.
#include <doctest.h>

#include <optional>
#include <vector>

#include "partlib/search.hpp"
#include "partlib/triple.hpp"

using namespace partlib;

TEST_CASE("prime sieve produces the primes up to the limit") {
  CHECK(sieve_primes(2) == std::vector<index_t>{2});
  CHECK(sieve_primes(13) == std::vector<index_t>{2, 3, 5, 7, 11, 13});

  auto ps = sieve_primes(157);
  CHECK(ps.size() == 37);
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 157);

  CHECK_THROWS_AS(sieve_primes(1), error);
}

TEST_CASE("smallest zero indices match independently computed values") {
  // Flat-block m-ary counts.
  auto b = [](index_t m) { return builtin_triple(family::b, m); };
  CHECK(smallest_zero(b(3), 5, 1000) == 9);
  CHECK(smallest_zero(b(3), 7, 1000) == 12);
  CHECK(smallest_zero(b(4), 17, 1000) == 108);
  CHECK(smallest_zero(b(5), 7, 1000) == 25);
  CHECK(smallest_zero(b(5), 31, 1000) == 170);
  CHECK(smallest_zero(b(12), 151, 6000) == 5292);

  // No-gaps variant.
  auto c = [](index_t m) { return builtin_triple(family::c, m); };
  CHECK(smallest_zero(c(3), 5, 1000) == 19);
  CHECK(smallest_zero(c(5), 19, 1000) == 56);
  CHECK(smallest_zero(c(8), 59, 2000) == 865);
  CHECK(smallest_zero(c(12), 157, 9000) == 8125);

  // Binary partition counts are never divisible by 8.
  CHECK(smallest_zero(b(2), 8, 10000) == std::nullopt);

  CHECK_THROWS_AS(smallest_zero(b(2), 1, 10), error);
  CHECK_THROWS_AS(smallest_zero(b(2), 5, 0), error);
}

TEST_CASE("grid search enumerates primes in (m+1, m^2+m+1] per base") {
  auto rep = appendix_table(family::b, 3, 3, 100, 1);
  CHECK(rep.fam == family::b);
  // Primes in [5, 13] for base 3: 5, 7, 11, 13.
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].m == 3);
  CHECK(rep.rows[0].p == 5);
  CHECK(rep.rows[0].n1 == 9);
  CHECK(rep.rows[1].p == 7);
  CHECK(rep.rows[1].n1 == 12);
  CHECK(rep.rows[2].p == 11);
  CHECK(rep.rows[2].n1 == 33);
  CHECK(rep.rows[3].p == 13);
  CHECK(rep.rows[3].n1 == 60);
  for (const auto& row : rep.rows) CHECK(row.bound == 100);

  CHECK_THROWS_AS(appendix_table(family::b, 1, 3, 10), error);
  CHECK_THROWS_AS(appendix_table(family::b, 5, 3, 10), error);
}

TEST_CASE("grid search is independent of the thread count") {
  auto seq = appendix_table(family::c, 2, 5, 400, 1);
  auto par = appendix_table(family::c, 2, 5, 400, 4);
  REQUIRE(seq.rows.size() == par.rows.size());
  for (size_t i = 0; i < seq.rows.size(); ++i) {
    CHECK(seq.rows[i].m == par.rows[i].m);
    CHECK(seq.rows[i].p == par.rows[i].p);
    CHECK(seq.rows[i].n1 == par.rows[i].n1);
    CHECK(seq.rows[i].bound == par.rows[i].bound);
  }
}

TEST_CASE("residue histograms count every scanned index") {
  const index_t N = 10000;
  auto hist = residue_coverage(builtin_triple(family::b, 5), 6, N);
  REQUIRE(hist.size() == 6);
  unsigned long long total = 0;
  for (auto c : hist) total += c;
  CHECK(total == static_cast<unsigned long long>(N) + 1);
  CHECK(all_classes_seen(hist));

  CHECK(all_classes_seen(residue_coverage(builtin_triple(family::c, 4), 5, N)));
  CHECK(all_classes_seen(residue_coverage(builtin_triple(family::ovb, 5), 5, N)));

  // Binary partition counts mod 8 stay in {1, 2, 4, 6}.
  auto h8 = residue_coverage(builtin_triple(family::b, 2), 8, N);
  CHECK_FALSE(all_classes_seen(h8));
  CHECK(h8[0] == 0);
  CHECK(h8[3] == 0);
  CHECK(h8[5] == 0);
  CHECK(h8[7] == 0);
  CHECK(h8[1] == 2);  // only n = 0, 1

  CHECK_THROWS_AS(residue_coverage(builtin_triple(family::b, 2), 1, 10), error);
}

TEST_CASE("trichotomy classifier distinguishes the four verdicts") {
  // Seed value 4 forces every value divisible by 4.
  auto all_div = make_triple("seed4", make_k_spec({}, 4, 0), {1, -1}, {1}, {bigint(4)});
  auto v1 = classify_trichotomy(all_div, 4, 2000);
  CHECK(v1.verdict == trichotomy::all_divisible);
  CHECK(v1.class_counts[0] == 2001);

  // Seed value 2 keeps every value even, but 2 itself is not divisible by 4.
  auto all_even = make_triple("seed2", make_k_spec({}, 3, 0), {1, -1}, {1}, {bigint(2)});
  auto v2 = classify_trichotomy(all_even, 4, 2000);
  CHECK(v2.verdict == trichotomy::all_non_coprime);
  CHECK(v2.class_counts[1] == 0);
  CHECK(v2.class_counts[3] == 0);
  CHECK(v2.class_counts[0] > 0);
  CHECK(v2.class_counts[2] > 0);

  auto v3 = classify_trichotomy(builtin_triple(family::b, 3), 3, 2000);
  CHECK(v3.verdict == trichotomy::all_classes_seen);

  // Mod 8 the binary counts hit class 1 (coprime) but never class 0.
  auto v4 = classify_trichotomy(builtin_triple(family::b, 2), 8, 2000);
  CHECK(v4.verdict == trichotomy::inconclusive);

  CHECK(trichotomy_name(v1.verdict) == doctest::String("AllDivisible"));
  CHECK(trichotomy_name(v2.verdict) == doctest::String("AllNonCoprime"));
  CHECK(trichotomy_name(v3.verdict) == doctest::String("AllClassesSeen"));
  CHECK(trichotomy_name(v4.verdict) == doctest::String("Inconclusive"));
}

TEST_CASE("binary partition values stay in {2,4,6} mod 8") {
  auto rep = check_churchhouse(20000);
  CHECK(rep.ok());
  CHECK(rep.checked == 19999);

  auto tiny = check_churchhouse(2);
  CHECK(tiny.ok());
  CHECK(tiny.checked == 1);

  CHECK_THROWS_AS(check_churchhouse(1), error);
}

TEST_CASE("power-of-two difference congruences hold from s = 1 on") {
  auto rep = check_rodseth_gupta(4, 99);
  CHECK(rep.ok());
  CHECK(rep.checked == 4 * 50);

  // The closed form for the 2-adic valuation fails at s = 0: already n = 1
  // gives b_2(4) - b_2(1) = 3, which is not 4 mod 8.
  auto bad = check_rodseth_gupta(0, 9, 0);
  CHECK_FALSE(bad.ok());
  CHECK(bad.checked == 5);
  REQUIRE(!bad.violations.empty());
  CHECK(bad.violations.front().find("s=0, n=1") != std::string::npos);

  CHECK_THROWS_AS(check_rodseth_gupta(2, 0), error);
}

TEST_CASE("base-power lifting congruences hold for every base") {
  auto r3 = check_andrews_gupta(3, 2, 30);
  CHECK(r3.ok());
  CHECK(r3.checked == 60);

  CHECK(check_andrews_gupta(2, 3, 20).ok());
  CHECK(check_andrews_gupta(5, 1, 40).ok());
  CHECK(check_andrews_gupta(6, 2, 25).ok());

  CHECK_THROWS_AS(check_andrews_gupta(1, 2, 10), error);
  CHECK_THROWS_AS(check_andrews_gupta(3, 0, 10), error);
}
