#include "spiralcert/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spiralcert/gaps.hpp"
#include "spiralcert/numeric.hpp"

namespace spiralcert {

namespace {

// Both counters must agree bit for bit, so they share these predicates.
inline bool forward_close(double d, double t) { return d <= t; }
inline bool wrap_close(double d, double t) { return (1.0 - d) <= t; }

}  // namespace

GapHistogram gap_histogram(const PhaseFamily& family, std::int64_t n,
                           std::span<const double> bin_edges) {
  if (n < 2) throw std::out_of_range("gap_histogram requires n >= 2");
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    if (!(bin_edges[i] > bin_edges[i - 1])) {
      throw std::invalid_argument("gap_histogram: bin edges must increase");
    }
  }
  std::vector<double> fracs;
  fracs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) fracs.push_back(frac_phase(family, i));
  std::vector<double> gaps = circular_gaps(fracs);

  GapHistogram hist;
  hist.family = family;
  hist.n = n;
  hist.bin_edges.assign(bin_edges.begin(), bin_edges.end());
  hist.counts.assign(bin_edges.size() + 1, 0);
  hist.min_rescaled = std::numeric_limits<double>::infinity();
  hist.max_rescaled = -std::numeric_limits<double>::infinity();
  auto scale = static_cast<double>(n);
  for (double g : gaps) {
    double r = g * scale;
    hist.min_rescaled = std::min(hist.min_rescaled, r);
    hist.max_rescaled = std::max(hist.max_rescaled, r);
    auto it = std::upper_bound(hist.bin_edges.begin(), hist.bin_edges.end(), r);
    ++hist.counts[static_cast<std::size_t>(it - hist.bin_edges.begin())];
  }
  return hist;
}

std::int64_t count_close_pairs(std::span<const double> sorted, double threshold) {
  const std::size_t n = sorted.size();
  std::int64_t count = 0;
  // forward pairs: v[j] - v[i] <= t
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < i + 1) j = i + 1;
    while (j < n && forward_close(sorted[j] - sorted[i], threshold)) ++j;
    count += static_cast<std::int64_t>(j - i - 1);
  }
  // wrap pairs: 1 - (v[j] - v[i]) <= t, qualifying j form a suffix
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < i + 1) k = i + 1;
    while (k < n && !wrap_close(sorted[k] - sorted[i], threshold)) ++k;
    if (k >= n) break;
    count += static_cast<std::int64_t>(n - k);
  }
  return count;
}

std::int64_t count_close_pairs_bruteforce(std::span<const double> values,
                                          double threshold) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      double d = std::abs(values[j] - values[i]);
      if (forward_close(d, threshold)) ++count;
      if (wrap_close(d, threshold)) ++count;
    }
  }
  return count;
}

PairCorrelationReport pair_correlation(std::int64_t n, std::span<const double> s_values,
                                       bool include_squares) {
  if (n < 100) throw std::out_of_range("pair_correlation requires n >= 100");
  for (double s : s_values) {
    if (!(s >= 0.0) || s > static_cast<double>(n) / 4.0) {
      throw std::invalid_argument("pair_correlation: s must lie in [0, n/4]");
    }
  }
  PhaseFamily family = PhaseFamily::sqrt_linear(1.0);
  std::vector<double> fracs;
  fracs.reserve(static_cast<std::size_t>(n));
  std::int64_t next_square_root = 1;
  std::int64_t excluded = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i == next_square_root * next_square_root) {
      ++next_square_root;
      if (!include_squares) {
        ++excluded;
        continue;
      }
    }
    fracs.push_back(frac_phase(family, i));
  }
  std::sort(fracs.begin(), fracs.end());

  PairCorrelationReport report;
  report.n = n;
  report.excluded = include_squares ? 0 : excluded;
  report.squares_included = include_squares;
  auto n_eff = static_cast<double>(fracs.size());
  for (double s : s_values) {
    double t = s / n_eff;
    std::int64_t unordered = count_close_pairs(fracs, t);
    report.s_values.push_back(s);
    report.statistics.push_back(2.0 * static_cast<double>(unordered) / n_eff);
    report.expected.push_back(2.0 * s);
  }
  return report;
}

}  // namespace spiralcert
