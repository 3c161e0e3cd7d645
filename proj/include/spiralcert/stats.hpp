#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spiralcert/phase.hpp"

namespace spiralcert {

// Histogram of circular gaps of frac(xi_n), n = 1..N, rescaled by N so the
// mean rescaled gap is 1. counts has bin_edges.size() + 1 entries: below the
// first edge, one per [e_k, e_{k+1}), and at-or-above the last edge.
struct GapHistogram {
  PhaseFamily family = PhaseFamily::sqrt_linear(1.0);
  std::int64_t n = 0;
  std::vector<double> bin_edges;
  std::vector<std::int64_t> counts;
  double min_rescaled = 0.0;
  double max_rescaled = 0.0;

  friend bool operator==(const GapHistogram&, const GapHistogram&) = default;
};

// Pair correlation of sqrt(n) mod 1 (perfect squares removed unless
// include_squares): R2(s) = (ordered pairs at circular distance <= s/N') / N'.
// A Poissonian sequence gives R2(s) = 2s.
struct PairCorrelationReport {
  std::int64_t n = 0;
  std::int64_t excluded = 0;
  bool squares_included = false;
  std::vector<double> s_values;
  std::vector<double> statistics;
  std::vector<double> expected;  // 2s per entry

  friend bool operator==(const PairCorrelationReport&, const PairCorrelationReport&) = default;
};

GapHistogram gap_histogram(const PhaseFamily& family, std::int64_t n,
                           std::span<const double> bin_edges);

PairCorrelationReport pair_correlation(std::int64_t n, std::span<const double> s_values,
                                       bool include_squares = false);

// Unordered pairs of `sorted` (ascending, values in [0,1)) at circular
// distance <= threshold. Sliding two-pointer, O(n).
std::int64_t count_close_pairs(std::span<const double> sorted, double threshold);

// O(n^2) reference for the sliding counter; same comparison expressions.
std::int64_t count_close_pairs_bruteforce(std::span<const double> values,
                                          double threshold);

}  // namespace spiralcert
