#include <doctest.h>

#include <random>
#include <set>

#include "fibpart/counting.hpp"
#include "fibpart/dynamics.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/staircase.hpp"

using namespace fibpart;
namespace g = fibpart::golden;

namespace {

// frac(m phi) as an exact element of Z[phi], strictly inside (0, 1) for m >= 1.
GoldenNum frac_phi(std::uint64_t m) {
  const Integer mi = m;
  return GoldenNum(-floor_scaled(GoldenNum::phi(), mi), mi);
}

std::vector<Ratio> sample_ratios() {
  return {Ratio(1, 3), Ratio(1, 2), Ratio(2, 3), Ratio(1), Ratio(3, 2), Ratio(2), Ratio(3)};
}

}  // namespace

TEST_CASE("level set of 1") {
  const Window w = level_set(1);
  REQUIRE(w.size() == 2);
  CHECK(w.intervals()[0] == Interval{-g::inv_phi4(), 0, true, true});
  CHECK(w.intervals()[1] == Interval{g::inv_phi2(), g::inv_phi2() + g::inv_phi5(), true, true});
  CHECK(w.length() == g::inv_phi3());
  CHECK(w.length() == GoldenNum(-3, 2));
}

TEST_CASE("level sets have two intervals and agree with h") {
  std::mt19937_64 rng(17);
  for (const Ratio& q : sample_ratios()) {
    INFO("q = " << q);
    const Window w = level_set(q);
    REQUIRE(w.size() == 2);
    for (const Interval& iv : w.intervals()) {
      CHECK(iv.lo < iv.hi);
      CHECK(in_strip(iv.lo));
      CHECK(in_strip(iv.hi));
      for (int i = 0; i < 100; ++i) {
        const GoldenNum y = iv.lo + iv.length() * frac_phi(1 + rng() % 1'000'000);
        REQUIRE(iv.contains(y));
        REQUIRE(h_eval(y) == q);
      }
    }
  }
}

TEST_CASE("level set membership matches h on the orbit") {
  std::vector<std::pair<Ratio, Window>> sets;
  for (const Ratio& q : sample_ratios()) sets.emplace_back(q, level_set(q));
  for (unsigned n = 0; n <= 10'000; ++n) {
    const GoldenNum y = orbit_point(n).y;
    const Ratio h = h_eval(y);
    for (const auto& [q, w] : sets) REQUIRE(w.contains(y) == (h == q));
  }
}

TEST_CASE("level set errors and depth") {
  CHECK_THROWS_AS(level_set(0), NonPositiveRatioError);
  CHECK_THROWS_AS(level_set(Ratio(-1, 2)), NonPositiveRatioError);
  CHECK_THROWS_AS(level_set(100), DepthExceededError);
  CHECK(level_set(100, 200).size() == 2);
  CHECK(stern_brocot_depth(1) == 0);
  CHECK(stern_brocot_depth(3) == 2);
  CHECK(stern_brocot_depth(Ratio(2, 3)) == 2);
  CHECK(stern_brocot_depth(Ratio(5, 3)) == 3);
}

TEST_CASE("staircase table") {
  const auto t0 = staircase_table(0);
  REQUIRE(t0.size() == 2);
  bool found = false;
  for (const auto& p : t0)
    if (p.interval == Interval{-g::inv_phi4(), 0, true, true} && p.value == Ratio(1)) found = true;
  CHECK(found);

  GoldenNum previous_total = 0;
  for (unsigned d = 0; d <= 12; ++d) {
    const auto table = staircase_table(d);
    REQUIRE(table.size() == (std::size_t{1} << (d + 2)) - 2);
    GoldenNum total = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      total += table[i].interval.length();
      REQUIRE(stern_brocot_depth(table[i].value) <= d);
      if (i > 0) REQUIRE(table[i - 1].interval.hi < table[i].interval.lo);
    }
    CHECK(total == staircase_coverage(d));
    CHECK(total >= previous_total);
    previous_total = total;
  }
}

TEST_CASE("staircase residual decays like (2/phi^2)^(d+1)") {
  for (unsigned d = 0; d <= 40; ++d) {
    const GoldenNum residual = GoldenNum(1) - staircase_coverage(d);
    const GoldenNum expected = GoldenNum(Integer(1) << (d + 1)) * GoldenNum::inv_phi_pow(2 * (d + 1));
    REQUIRE(residual == expected);
  }
  // 10^-3 is first reached at depth 25, not 20.
  CHECK(to_double(GoldenNum(1) - staircase_coverage(20)) == doctest::Approx(0.003487).epsilon(1e-3));
  CHECK(to_double(GoldenNum(1) - staircase_coverage(24)) > 1e-3);
  CHECK(to_double(GoldenNum(1) - staircase_coverage(25)) < 1e-3);
}

TEST_CASE("table values agree with h on the orbit") {
  const auto table = staircase_table(10);
  for (unsigned n = 0; n <= 2582; ++n) {
    const GoldenNum y = orbit_point(n).y;
    for (const auto& p : table)
      if (p.interval.contains(y)) REQUIRE(h_eval(y) == p.value);
  }
}

TEST_CASE("patch windows") {
  CHECK(patch_window(Patch({1})) == level_set(1));
  const Window w11 = patch_window(Patch({1, 1}));
  const Window l1 = level_set(1);
  for (const Interval& iv : w11.intervals()) {
    CHECK(l1.contains(iv.lo));
    CHECK(l1.contains(iv.hi));
  }
  CHECK(intersect(w11, l1) == w11);
  CHECK(Patch::parse("2,3/2").ratios() == std::vector<Ratio>{2, Ratio(3, 2)});
  CHECK(Patch({2, 3}).steps() == std::vector<Ratio>{2, Ratio(3, 2)});
  CHECK_THROWS_AS(Patch({}), NonPositiveRatioError);
  CHECK_THROWS_AS(Patch({1, 0}), NonPositiveRatioError);
}

TEST_CASE("patch occurrences") {
  CHECK(patch_hits(Patch({1}), 13) == std::vector<std::uint64_t>{0, 1, 5, 9, 13});
  const auto h11 = patch_hits(Patch({1, 1}), 2);
  CHECK(std::find(h11.begin(), h11.end(), 0) != h11.end());
  CHECK(patch_hits(Patch({1}), 10'000) == patch_hits_by_scan(Patch({1}), 0, 10'000));
  CHECK(patch_hits(Patch({1}), 5000, 9000) == patch_hits_by_scan(Patch({1}), 5000, 9000));
}

TEST_CASE("duality for patches read off the sequence") {
  std::mt19937_64 rng(23);
  const auto r = r_values(0, 20'010);
  std::set<std::vector<Ratio>> seen;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng() % 20'000;
    const std::size_t k = 1 + rng() % 4;
    std::vector<Ratio> ratios;
    for (std::size_t j = 1; j <= k; ++j) ratios.emplace_back(r[n + j], r[n]);
    if (!seen.insert(ratios).second) continue;
    const Patch P(ratios);
    const auto hits = patch_hits(P, 20'000);
    REQUIRE(hits == patch_hits_by_scan(P, 0, 20'000));
    REQUIRE(std::find(hits.begin(), hits.end(), n) != hits.end());
  }
  CHECK(seen.size() > 50);
}

TEST_CASE("duality on a shifted range for a patch that never occurs") {
  const Patch P({1, 1, 1});
  CHECK(patch_hits(P, 10'000).empty());
  CHECK(patch_hits_by_scan(P, 0, 10'000).empty());
  CHECK(density(P).exact == GoldenNum(0));
}

TEST_CASE("densities") {
  const Density d1 = density(Patch({1}));
  CHECK(d1.exact == g::inv_phi3());
  CHECK(d1.approx.rfind("0.236067977", 0) == 0);

  const std::uint64_t N = 1'000'000;
  const double freq1 = static_cast<double>(patch_hits(Patch({1}), N - 1).size()) / N;
  CHECK(std::abs(freq1 - to_double(d1.exact)) < 1e-3);

  const std::uint64_t M = 100'000;
  const double freq11 = static_cast<double>(patch_hits_by_scan(Patch({1, 1}), 0, M - 1).size()) / M;
  CHECK(std::abs(freq11 - to_double(density(Patch({1, 1})).exact)) < 1e-2);
}

TEST_CASE("rotation preimage") {
  const Window w = level_set(2);
  const Window pre = rotate_preimage(w);
  CHECK(pre.length() == w.length());
  for (unsigned n = 0; n <= 5000; ++n)
    REQUIRE(pre.contains(orbit_point(n).y) == w.contains(orbit_point(n + 1).y));
}

TEST_CASE("nondecreasing runs") {
  const auto r = r_values(0, 3);
  CHECK(r == std::vector<Integer>{1, 1, 1, 2});
  const RunStats s = longest_nondecreasing_run(100'000);
  CHECK(s.k_max == 3);
  CHECK(s.witnesses == std::vector<std::uint64_t>{0});
  CHECK(s.strict_k_max >= 1);
  CHECK(s.strict_k_max < s.k_max);
  CHECK(!s.strict_witnesses.empty());
}
