#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spiralcert/phase.hpp"
#include "spiralcert/spiral.hpp"

namespace spiralcert {

// A sector of the plane: argument (as a fraction of a full turn) in
// [angle_lo, angle_hi) mod 1 with angle_hi - angle_lo in [0, 1], radius in
// [radius_lo, radius_hi]. Index membership is decided in integer arithmetic
// on n (radius_lo^2 <= n <= radius_hi^2), never on floating radii.
struct SectorSpec {
  double angle_lo = 0.0;
  double angle_hi = 1.0;
  double radius_lo = 0.0;
  double radius_hi = 0.0;

  friend bool operator==(const SectorSpec&, const SectorSpec&) = default;
};

void validate_sector(const SectorSpec& spec);

struct DeltaMChecks {
  // Upper profile (h = 1/alpha): R * delta_M < (alpha + 1/alpha)/2.
  bool upper_ok = false;
  std::int64_t upper_checked = 0;
  double upper_worst = 0.0;  // max of R * delta_M seen
  // Lower profile (h = 1/(2 alpha)): R * delta_M > 1 for R >= 2 + h/2.
  bool lower_ok = false;
  std::int64_t lower_checked = 0;
  double lower_worst = 0.0;  // min of R * delta_M over the checked range

  friend bool operator==(const DeltaMChecks&, const DeltaMChecks&) = default;
};

// Aggregated certificate for one sqrt-family point set.
struct DeloneReport {
  PhaseFamily family = PhaseFamily::sqrt_linear(1.0);
  double r_max = 0.0;
  double h_lower = 0.0;  // 1/(2 alpha), up to a 1-ulp cap (see gaps.cpp)
  double h_upper = 0.0;  // 1/alpha, same cap
  double inf_scaled = 0.0;  // inf of R * g_R^h over the lower-h grid
  double sup_scaled = 0.0;  // sup of R * g_R^h over the upper-h grid
  double separation_bound = 0.0;  // 4 * min(1/2, inf_scaled)
  std::int64_t grid_size = 0;
  std::int64_t flagged_windows = 0;  // windows with fewer than 2 points

  // Desk-scale empirics over a fixed bounded patch of the set.
  double empirics_radius = 0.0;      // points generated out to this radius
  double packing_radius = 0.0;       // min pairwise distance over the patch
  SectorSpec covering_region;        // region sampled for the covering radius
  double covering_eps = 0.0;
  double covering_radius_est = 0.0;
  double covering_slack = 0.0;
  SectorSpec density_sector;
  double density_ratio = 0.0;

  DeltaMChecks delta_m;
  bool verdict = false;  // inf_scaled > 0 and finite covering estimate

  friend bool operator==(const DeloneReport&, const DeloneReport&) = default;
};

// Exact minimum pairwise distance, O(N^2). The reference oracle.
double packing_radius_bruteforce(std::span<const SpiralPoint> points);

// Same value as the brute force, via uniform-grid bucketing. The grid is
// rebuilt with a safely enlarged cell whenever the scan cannot certify that
// every pair at the candidate distance was examined, so the result is exact,
// not approximate.
double packing_radius_grid(std::span<const SpiralPoint> points, double cell_size);

struct CoveringEstimate {
  double estimate = 0.0;  // max over the eps-grid of distance to nearest point
  double slack = 0.0;     // eps * sqrt(2)/2
};

// Covering-radius estimate over `region` by exhaustive max over an eps-spaced
// sample grid (anchored at integer multiples of eps). The true covering
// radius over the region lies in [estimate, estimate + slack] because the
// nearest-point distance is 1-Lipschitz. Points outside the region must be
// present in `points` out to at least the region boundary.
CoveringEstimate covering_radius_estimate(std::span<const SpiralPoint> points,
                                          const SectorSpec& region, double eps);

// Exact count of indices n with radius_lo^2 <= n <= radius_hi^2 and
// frac(xi_n) in [angle_lo, angle_hi) mod 1.
std::int64_t sector_count(const PhaseFamily& family, const SectorSpec& spec);

// sector_count over the expected count at asymptotic density 1/pi, which is
// (angle width) * (radius_hi^2 - radius_lo^2). Tends to 1 for uniformly
// distributed families as the sector grows.
double density_ratio(const PhaseFamily& family, const SectorSpec& spec);

}  // namespace spiralcert
