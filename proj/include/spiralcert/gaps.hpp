#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spiralcert/geometry.hpp"
#include "spiralcert/phase.hpp"
#include "spiralcert/spiral.hpp"

namespace spiralcert {

// Circular gaps of the fractional phases over one index window. For the
// sqrt family with alpha * width <= 1 the phases are ordered mod 1, so the
// gaps are listed in index order; otherwise in sorted order. The last entry
// is always the wrap-around gap delta_M.
struct GapReport {
  AnnulusWindow window;
  std::vector<double> gaps;
  double min_gap = 0.0;         // g_R^h
  double scaled_min_gap = 0.0;  // R * g_R^h

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

// Per-window scalar summary used by profiles over large grids.
struct GapSummary {
  AnnulusWindow window;
  double min_gap = 0.0;
  double scaled_min_gap = 0.0;
  double wrap_gap = 0.0;  // delta_M
  bool included = false;  // false when the window holds fewer than 2 points

  friend bool operator==(const GapSummary&, const GapSummary&) = default;
};

struct GapProfile {
  PhaseFamily family = PhaseFamily::sqrt_linear(1.0);
  double width = 0.0;
  std::vector<GapSummary> entries;
  double inf_scaled = 0.0;  // over included entries
  double sup_scaled = 0.0;
  std::int64_t included_count = 0;
  std::int64_t flagged_count = 0;

  friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

// Gaps of values in [0,1): sorts, returns the consecutive differences plus
// the wrap gap (first + 1 - last) as the final entry. Gaps sum to 1.
std::vector<double> circular_gaps(std::span<const double> values);

// Requires a nonempty window.
GapReport window_gaps(const PhaseFamily& family, double inner_radius, double width);

// Evaluates the window at every grid radius (ascending) and feeds one
// summary per nonempty window to `sink`. For the sqrt family with
// alpha * width <= 1 this runs on a shared precomputed gap array, so large
// grids cost O(total window length) with no per-window allocation.
void scan_gap_profile(const PhaseFamily& family, double width,
                      std::span<const double> radius_grid,
                      const std::function<void(const GapSummary&)>& sink);

GapProfile gap_profile(const PhaseFamily& family, double width,
                       std::span<const double> radius_grid);

// Certificate grid: all integer radii in [1, r_max] plus sqrt(m) - h/2 for
// every integer m whose window midpoint falls in range. g_R^h changes only
// when the index window changes, so this samples every window shape once.
std::vector<double> make_verdict_grid(double r_max, double width);

struct DeloneOptions {
  double empirics_radius = 50.0;  // covering/density region outer radius
  double covering_eps = 0.05;
  bool with_empirics = true;
};

// Runs gap profiles at h = 1/(2 alpha) and h = 1/alpha over the verdict
// grid, checks the wrap-gap bounds, and attaches desk-scale packing /
// covering / density empirics. Requires a sqrt family and r_max >= 4.
DeloneReport delone_verdict(const PhaseFamily& family, double r_max,
                            const DeloneOptions& options = {});

}  // namespace spiralcert
