#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "spiralcert/gaps.hpp"
#include "spiralcert/numeric.hpp"
#include "spiralcert/stats.hpp"

using namespace spiralcert;

TEST_CASE("equally spaced phases give unit rescaled gaps") {
  const int n = 500;
  std::vector<double> vals;
  for (int i = 0; i < n; ++i) vals.push_back(static_cast<double>(i) / n);
  auto fam = PhaseFamily::custom(vals);
  std::vector<double> edges{0.5, 0.999, 1.001, 2.0};
  GapHistogram h = gap_histogram(fam, n, edges);
  CHECK(std::abs(h.min_rescaled - 1.0) <= 1e-9);
  CHECK(std::abs(h.max_rescaled - 1.0) <= 1e-9);
  std::int64_t total = 0;
  for (auto c : h.counts) total += c;
  CHECK(total == n);
  CHECK(h.counts[2] == n);  // everything in [0.999, 1.001)
}

TEST_CASE("linear golden family shows at most three distinct gaps") {
  double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  auto fam = PhaseFamily::linear(golden);
  std::vector<double> fracs;
  for (int n = 1; n <= 1000; ++n) fracs.push_back(frac_phase(fam, n));
  auto gaps = circular_gaps(fracs);
  std::sort(gaps.begin(), gaps.end());
  int clusters = 1;
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] - gaps[i - 1] > 1e-12) ++clusters;
  }
  CHECK(clusters <= 3);
}

TEST_CASE("histogram mass and mean for the sqrt family") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  std::vector<double> edges{0.0, 0.5, 1.0, 2.0, 5.0};
  const std::int64_t n = 10000;
  GapHistogram h = gap_histogram(fam, n, edges);
  std::int64_t total = 0;
  for (auto c : h.counts) total += c;
  CHECK(total == n);
  // mean rescaled gap is 1: gaps sum to 1, each scaled by n
  std::vector<double> fracs;
  for (std::int64_t i = 1; i <= n; ++i) fracs.push_back(frac_phase(fam, i));
  CompensatedSum mean;
  for (double g : circular_gaps(fracs)) mean.add(g * static_cast<double>(n));
  CHECK(std::abs(mean.value() / static_cast<double>(n) - 1.0) <= 1e-9);
}

TEST_CASE("rational-square alpha produces extreme rescaled gaps") {
  GapHistogram h = gap_histogram(PhaseFamily::sqrt_linear(1.0), 100000,
                                 std::vector<double>{0.1, 1.0, 3.0});
  CHECK(h.min_rescaled < 0.1);
  CHECK(h.max_rescaled > 3.0);
}

TEST_CASE("pair counting: sliding window equals brute force") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int seed = 0; seed < 10; ++seed) {
    std::vector<double> vals;
    int n = 200 + static_cast<int>(rng() % 800);
    for (int i = 0; i < n; ++i) vals.push_back(u(rng));
    std::sort(vals.begin(), vals.end());
    for (double s : {0.25, 1.0, 3.0}) {
      double t = s / static_cast<double>(n);
      CHECK(count_close_pairs(vals, t) == count_close_pairs_bruteforce(vals, t));
    }
  }
}

TEST_CASE("pair counting on the sqrt sequence at n = 2000") {
  std::vector<double> vals;
  auto fam = PhaseFamily::sqrt_linear(1.0);
  std::int64_t next_sq = 1;
  for (std::int64_t n = 1; n <= 2000; ++n) {
    if (n == next_sq * next_sq) {
      ++next_sq;
      continue;
    }
    vals.push_back(frac_phase(fam, n));
  }
  std::sort(vals.begin(), vals.end());
  double t = 1.0 / static_cast<double>(vals.size());
  CHECK(count_close_pairs(vals, t) == count_close_pairs_bruteforce(vals, t));
}

TEST_CASE("ordered pairs are exactly twice the unordered count") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> vals;
  for (int i = 0; i < 300; ++i) vals.push_back(u(rng));
  double t = 0.004;
  std::int64_t ordered = 0;
  for (std::size_t a = 0; a < vals.size(); ++a) {
    for (std::size_t b = 0; b < vals.size(); ++b) {
      if (a == b) continue;
      if (circular_distance(vals[a], vals[b]) <= t) ++ordered;
    }
  }
  std::sort(vals.begin(), vals.end());
  CHECK(ordered == 2 * count_close_pairs(vals, t));
}

TEST_CASE("pair correlation report") {
  auto r = pair_correlation(10000, std::vector<double>{0.0, 0.5, 1.0, 2.0});
  CHECK(r.excluded == 100);  // floor(sqrt(10000))
  CHECK(r.statistics[0] == 0.0);
  for (std::size_t i = 1; i < r.statistics.size(); ++i) {
    CHECK(r.statistics[i] >= r.statistics[i - 1]);  // monotone in s
  }
  CHECK(r.expected == std::vector<double>{0.0, 1.0, 2.0, 4.0});
  auto with_squares = pair_correlation(10000, std::vector<double>{1.0}, true);
  CHECK(with_squares.excluded == 0);
  CHECK(with_squares.squares_included);
  // the square indices pile up at 0 mod 1 and inflate the close-pair count
  CHECK(with_squares.statistics[0] > r.statistics[2]);
}

TEST_CASE("pair correlation near the Poisson line at n = 1e5") {
  auto r = pair_correlation(100000, std::vector<double>{0.5, 1.0, 2.0});
  for (std::size_t i = 0; i < r.s_values.size(); ++i) {
    CHECK(std::abs(r.statistics[i] - r.expected[i]) <= 0.15 * r.expected[i]);
  }
}

TEST_CASE("stats input validation") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  CHECK_THROWS_AS(gap_histogram(fam, 1, std::vector<double>{0.0, 1.0}),
                  std::out_of_range);
  CHECK_THROWS_AS(gap_histogram(fam, 100, std::vector<double>{1.0, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pair_correlation(50, std::vector<double>{1.0}), std::out_of_range);
  CHECK_THROWS_AS(pair_correlation(1000, std::vector<double>{400.0}),
                  std::invalid_argument);
}
