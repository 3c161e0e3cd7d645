#include "spiralcert/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spiralcert/numeric.hpp"

namespace spiralcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Largest h with alpha * h <= target in double arithmetic. Used so that the
// ordered-mod-1 window property (phase span < 1) survives the rounding of
// 1/alpha; at most a couple of ulps below the exact quotient.
double capped_ratio(double target, double alpha) {
  double h = target / alpha;
  while (alpha * h > target) h = std::nextafter(h, 0.0);
  return h;
}

bool phases_ordered_in_window(const PhaseFamily& family, double width) {
  return family.kind() == PhaseKind::SqrtLinear && family.alpha() * width <= 1.0;
}

double diff_mod1(double hi, double lo) {
  double d = hi - lo;
  if (d < 0.0) d += 1.0;
  return d;
}

GapSummary summarize(const AnnulusWindow& w, double min_gap, double wrap_gap) {
  GapSummary s;
  s.window = w;
  s.min_gap = min_gap;
  s.scaled_min_gap = w.inner_radius * min_gap;
  s.wrap_gap = wrap_gap;
  s.included = w.count >= 2;
  return s;
}

// Shared-array profile scan for ordered sqrt-family windows. One pass builds
// the per-index gap array d[n] = frac(xi_{n+1}) - frac(xi_n) mod 1 and its
// running sum in double-word precision; each grid window then needs only a
// min-scan over its slice plus one interval sum for the wrap gap.
void scan_profile_ordered(const PhaseFamily& family, double width,
                          std::span<const double> grid,
                          const std::function<void(const GapSummary&)>& sink) {
  AnnulusWindow first_w = window(grid.front(), width);
  AnnulusWindow last_w = window(grid.back(), width);
  std::int64_t n_lo = first_w.first_index;
  std::int64_t n_hi = last_w.first_index + std::max<std::int64_t>(last_w.count, 1);
  if (n_hi <= n_lo) n_hi = n_lo + 1;

  const std::size_t len = static_cast<std::size_t>(n_hi - n_lo);  // >= 1
  std::vector<double> gap(len - 1);
  std::vector<double> prefix_hi(len), prefix_lo(len);
  double prev = frac_phase(family, n_lo);
  double acc_hi = 0.0, acc_lo = 0.0;
  prefix_hi[0] = 0.0;
  prefix_lo[0] = 0.0;
  for (std::size_t i = 1; i < len; ++i) {
    double cur = frac_phase(family, n_lo + static_cast<std::int64_t>(i));
    double d = diff_mod1(cur, prev);
    gap[i - 1] = d;
    prev = cur;
    DoubleWord s = two_sum(acc_hi, d);
    acc_lo += s.lo;
    acc_hi = s.hi;
    prefix_hi[i] = acc_hi;
    prefix_lo[i] = acc_lo;
  }

  for (double radius : grid) {
    AnnulusWindow w = window(radius, width);
    if (w.count == 0) continue;
    if (w.count == 1) {
      sink(summarize(w, 1.0, 1.0));
      continue;
    }
    std::size_t i0 = static_cast<std::size_t>(w.first_index - n_lo);
    std::size_t i1 = i0 + static_cast<std::size_t>(w.count) - 1;  // one past interior gaps
    double min_interior = kInf;
    const double* g = gap.data();
    for (std::size_t i = i0; i < i1; ++i) {
      if (g[i] < min_interior) min_interior = g[i];
    }
    double span = (prefix_hi[i1] - prefix_hi[i0]) + (prefix_lo[i1] - prefix_lo[i0]);
    double wrap = 1.0 - span;
    sink(summarize(w, std::min(min_interior, wrap), wrap));
  }
}

}  // namespace

std::vector<double> circular_gaps(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("circular_gaps: empty input");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw std::invalid_argument("circular_gaps: values must lie in [0, 1)");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> gaps;
  gaps.reserve(sorted.size());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    gaps.push_back(sorted[i + 1] - sorted[i]);
  }
  gaps.push_back(sorted.front() + 1.0 - sorted.back());
  return gaps;
}

GapReport window_gaps(const PhaseFamily& family, double inner_radius, double width) {
  AnnulusWindow w = window(inner_radius, width);
  if (w.count == 0) throw std::invalid_argument("window_gaps: empty window");

  GapReport report;
  report.window = w;
  std::vector<double> fracs;
  fracs.reserve(static_cast<std::size_t>(w.count));
  for (std::int64_t n = w.first_index; n < w.first_index + w.count; ++n) {
    fracs.push_back(frac_phase(family, n));
  }

  if (phases_ordered_in_window(family, width)) {
    // Phases span less than one turn, so index order is circle order and the
    // gaps are the index-consecutive differences. The wrap gap is recovered
    // as 1 - sum(others) in compensated arithmetic.
    report.gaps.reserve(fracs.size());
    CompensatedSum interior;
    for (std::size_t i = 0; i + 1 < fracs.size(); ++i) {
      double d = diff_mod1(fracs[i + 1], fracs[i]);
      report.gaps.push_back(d);
      interior.add(d);
    }
    report.gaps.push_back(1.0 - interior.value());
  } else {
    report.gaps = circular_gaps(fracs);
  }

  report.min_gap = *std::min_element(report.gaps.begin(), report.gaps.end());
  report.scaled_min_gap = inner_radius * report.min_gap;
  return report;
}

void scan_gap_profile(const PhaseFamily& family, double width,
                      std::span<const double> radius_grid,
                      const std::function<void(const GapSummary&)>& sink) {
  if (radius_grid.empty()) throw std::invalid_argument("gap profile: empty grid");
  if (!(width > 0.0)) throw std::domain_error("gap profile: width must be > 0");
  for (std::size_t i = 0; i < radius_grid.size(); ++i) {
    if (!(radius_grid[i] >= 1.0)) throw std::domain_error("gap profile: radii must be >= 1");
    if (i > 0 && radius_grid[i] < radius_grid[i - 1]) {
      throw std::invalid_argument("gap profile: grid must be sorted ascending");
    }
  }

  if (phases_ordered_in_window(family, width)) {
    scan_profile_ordered(family, width, radius_grid, sink);
    return;
  }
  for (double radius : radius_grid) {
    AnnulusWindow w = window(radius, width);
    if (w.count == 0) continue;
    GapReport r = window_gaps(family, radius, width);
    sink(summarize(w, r.min_gap, r.gaps.back()));
  }
}

GapProfile gap_profile(const PhaseFamily& family, double width,
                       std::span<const double> radius_grid) {
  GapProfile profile;
  profile.family = family;
  profile.width = width;
  double inf_scaled = kInf;
  double sup_scaled = -kInf;
  scan_gap_profile(family, width, radius_grid, [&](const GapSummary& s) {
    profile.entries.push_back(s);
    if (s.included) {
      ++profile.included_count;
      inf_scaled = std::min(inf_scaled, s.scaled_min_gap);
      sup_scaled = std::max(sup_scaled, s.scaled_min_gap);
    } else {
      ++profile.flagged_count;
    }
  });
  profile.inf_scaled = profile.included_count > 0 ? inf_scaled : kNaN;
  profile.sup_scaled = profile.included_count > 0 ? sup_scaled : kNaN;
  return profile;
}

std::vector<double> make_verdict_grid(double r_max, double width) {
  if (!(r_max >= 1.0)) throw std::domain_error("verdict grid requires r_max >= 1");
  if (!(width > 0.0)) throw std::domain_error("verdict grid requires width > 0");
  std::vector<double> grid;
  auto r_int_max = static_cast<std::int64_t>(std::floor(r_max));
  std::int64_t m_lo = sq_ceil(1.0 + 0.5 * width);
  std::int64_t m_hi = sq_floor(r_max + 0.5 * width);
  grid.reserve(static_cast<std::size_t>(r_int_max + std::max<std::int64_t>(0, m_hi - m_lo + 1)));
  for (std::int64_t r = 1; r <= r_int_max; ++r) grid.push_back(static_cast<double>(r));
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    double v = std::sqrt(static_cast<double>(m)) - 0.5 * width;
    if (v >= 1.0 && v <= r_max) grid.push_back(v);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

DeloneReport delone_verdict(const PhaseFamily& family, double r_max,
                            const DeloneOptions& options) {
  if (family.kind() != PhaseKind::SqrtLinear) {
    throw std::invalid_argument("delone_verdict requires the sqrt family");
  }
  if (!(r_max >= 4.0)) throw std::domain_error("delone_verdict requires r_max >= 4");
  double alpha = family.alpha();
  double h_upper = capped_ratio(1.0, alpha);
  double h_lower = capped_ratio(0.5, alpha);
  double outer = r_max + h_upper;
  if (!(outer < 1048576.0) || sq_ceil(outer) > kPhaseIndexLimit) {
    throw PrecisionRangeError("delone_verdict: r_max exceeds the validated phase range");
  }

  DeloneReport report;
  report.family = family;
  report.r_max = r_max;
  report.h_lower = h_lower;
  report.h_upper = h_upper;

  double inf_scaled = kInf;
  double lower_worst = kInf;
  std::int64_t lower_checked = 0;
  double lower_threshold = 2.0 + 0.5 * h_lower;
  {
    std::vector<double> grid = make_verdict_grid(r_max, h_lower);
    report.grid_size += static_cast<std::int64_t>(grid.size());
    scan_gap_profile(family, h_lower, grid, [&](const GapSummary& s) {
      if (s.included) {
        inf_scaled = std::min(inf_scaled, s.scaled_min_gap);
      } else {
        ++report.flagged_windows;
      }
      if (s.window.inner_radius >= lower_threshold) {
        ++lower_checked;
        lower_worst = std::min(lower_worst, s.window.inner_radius * s.wrap_gap);
      }
    });
  }

  double sup_scaled = -kInf;
  double upper_worst = -kInf;
  std::int64_t upper_checked = 0;
  double upper_bound = 0.5 * (alpha + 1.0 / alpha);
  {
    std::vector<double> grid = make_verdict_grid(r_max, h_upper);
    report.grid_size += static_cast<std::int64_t>(grid.size());
    scan_gap_profile(family, h_upper, grid, [&](const GapSummary& s) {
      if (s.included) {
        sup_scaled = std::max(sup_scaled, s.scaled_min_gap);
      } else {
        ++report.flagged_windows;
      }
      // The wrap-gap upper bound rests on M >= 2hR + h^2, which is
      // guaranteed only when the window starts exactly at an integer R^2;
      // windows snapped to interior boundaries can hold fewer points.
      double radius = s.window.inner_radius;
      if (std::floor(radius) == radius) {
        ++upper_checked;
        upper_worst = std::max(upper_worst, radius * s.wrap_gap);
      }
    });
  }

  report.inf_scaled = std::isfinite(inf_scaled) ? inf_scaled : kNaN;
  report.sup_scaled = std::isfinite(sup_scaled) ? sup_scaled : kNaN;
  report.separation_bound = 4.0 * std::min(0.5, report.inf_scaled);
  report.delta_m.upper_checked = upper_checked;
  report.delta_m.upper_worst = upper_worst;
  report.delta_m.upper_ok = upper_checked > 0 && upper_worst < upper_bound;
  report.delta_m.lower_checked = lower_checked;
  report.delta_m.lower_worst = lower_worst;
  report.delta_m.lower_ok = lower_checked > 0 && lower_worst > 1.0;

  if (options.with_empirics) {
    if (!(options.empirics_radius >= 15.0)) {
      throw std::domain_error("delone_verdict: empirics radius must be >= 15");
    }
    report.empirics_radius = options.empirics_radius + 10.0;
    std::vector<SpiralPoint> pts = generate(family, sq_floor(report.empirics_radius));
    report.packing_radius = packing_radius_grid(pts, 1.0);
    report.covering_region = {0.0, 1.0, 5.0, options.empirics_radius};
    report.covering_eps = options.covering_eps;
    CoveringEstimate cover =
        covering_radius_estimate(pts, report.covering_region, options.covering_eps);
    report.covering_radius_est = cover.estimate;
    report.covering_slack = cover.slack;
    report.density_sector = {0.0, 0.25, 5.0, options.empirics_radius};
    report.density_ratio = density_ratio(family, report.density_sector);
    report.verdict = report.inf_scaled > 0.0 && std::isfinite(report.covering_radius_est);
  } else {
    report.covering_radius_est = kNaN;
    report.covering_slack = kNaN;
    report.packing_radius = kNaN;
    report.density_ratio = kNaN;
    report.verdict = report.inf_scaled > 0.0;
  }
  return report;
}

}  // namespace spiralcert
