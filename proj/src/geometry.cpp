#include "spiralcert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "spiralcert/numeric.hpp"

namespace spiralcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Both packing routines funnel every candidate pair through this one
// function so that grid and brute force return bit-identical results.
inline double pair_dist2(const SpiralPoint& p, const SpiralPoint& q) {
  double dx = p.x - q.x;
  double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

struct CellKey {
  std::int64_t cx;
  std::int64_t cy;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    auto h = static_cast<std::uint64_t>(k.cx) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.cy) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using CellMap = std::unordered_map<CellKey, std::vector<std::int32_t>, CellKeyHash>;

CellKey cell_of(double x, double y, double inv_cell) {
  return {static_cast<std::int64_t>(std::floor(x * inv_cell)),
          static_cast<std::int64_t>(std::floor(y * inv_cell))};
}

// Minimum dist^2 over all pairs that share a cell or sit in adjacent cells.
// Any pair with |dx| <= cell and |dy| <= cell lands in adjacent cells, so
// every pair at Euclidean distance <= cell is examined.
double min_dist2_bucketed(std::span<const SpiralPoint> points, double cell) {
  double inv_cell = 1.0 / cell;
  CellMap cells;
  cells.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    cells[cell_of(points[i].x, points[i].y, inv_cell)].push_back(
        static_cast<std::int32_t>(i));
  }
  // half stencil so each unordered cell pair is visited once
  constexpr int kNbr[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  double best2 = kInf;
  for (const auto& [key, ids] : cells) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        best2 = std::min(best2, pair_dist2(points[ids[a]], points[ids[b]]));
      }
    }
    for (const auto& d : kNbr) {
      auto it = cells.find({key.cx + d[0], key.cy + d[1]});
      if (it == cells.end()) continue;
      for (std::int32_t ia : ids) {
        for (std::int32_t ib : it->second) {
          best2 = std::min(best2, pair_dist2(points[ia], points[ib]));
        }
      }
    }
  }
  return best2;
}

bool angle_in_sector(double frac, const SectorSpec& spec) {
  double width = spec.angle_hi - spec.angle_lo;
  if (width >= 1.0) return true;
  double v = frac - reduce_unit(spec.angle_lo);
  if (v < 0.0) v += 1.0;
  return v < width;
}

// --- nearest-point queries over a uniform grid -----------------------------

class PointGrid {
 public:
  PointGrid(std::span<const SpiralPoint> points, double cell)
      : points_(points), cell_(cell), inv_cell_(1.0 / cell) {
    cells_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      cells_[cell_of(points[i].x, points[i].y, inv_cell_)].push_back(
          static_cast<std::int32_t>(i));
    }
  }

  // Exact distance to the nearest point: expanding Chebyshev rings of cells,
  // stopping once the next ring cannot beat the best distance found.
  double nearest_distance(double x, double y) const {
    auto qx = static_cast<std::int64_t>(std::floor(x * inv_cell_));
    auto qy = static_cast<std::int64_t>(std::floor(y * inv_cell_));
    double best2 = kInf;
    for (std::int64_t ring = 0;; ++ring) {
      double ring_min = (static_cast<double>(ring) - 1.0) * cell_;
      if (ring_min > 0.0 && ring_min * ring_min > best2) break;
      bool any = scan_ring(qx, qy, ring, x, y, best2);
      if (!any && ring > (1 << 24)) {
        throw std::logic_error("nearest_distance: no points reachable");
      }
    }
    return std::sqrt(best2);
  }

 private:
  bool scan_ring(std::int64_t qx, std::int64_t qy, std::int64_t ring, double x,
                 double y, double& best2) const {
    bool any = false;
    auto visit = [&](std::int64_t cx, std::int64_t cy) {
      auto it = cells_.find({cx, cy});
      if (it == cells_.end()) return;
      any = true;
      for (std::int32_t i : it->second) {
        double dx = points_[i].x - x;
        double dy = points_[i].y - y;
        best2 = std::min(best2, dx * dx + dy * dy);
      }
    };
    if (ring == 0) {
      visit(qx, qy);
      return any;
    }
    for (std::int64_t d = -ring; d <= ring; ++d) {
      visit(qx + d, qy - ring);
      visit(qx + d, qy + ring);
    }
    for (std::int64_t d = -ring + 1; d <= ring - 1; ++d) {
      visit(qx - ring, qy + d);
      visit(qx + ring, qy + d);
    }
    return any;
  }

  std::span<const SpiralPoint> points_;
  double cell_;
  double inv_cell_;
  CellMap cells_;
};

// Branch-and-bound max of the nearest-distance field over the eps-grid.
// Blocks cover aligned squares of sample indices; a block prunes when even
// the Lipschitz upper bound from its centre cannot beat the current best.
// Every evaluated sample is a true eps-grid sample, so the final best equals
// the exhaustive grid max exactly.
class CoveringScan {
 public:
  CoveringScan(const PointGrid& grid, const SectorSpec& region, double eps)
      : grid_(grid), region_(region), eps_(eps) {
    r_lo2_ = region.radius_lo * region.radius_lo;
    r_hi2_ = region.radius_hi * region.radius_hi;
  }

  double run() {
    auto lo = static_cast<std::int64_t>(std::ceil(-region_.radius_hi / eps_));
    auto hi = static_cast<std::int64_t>(std::floor(region_.radius_hi / eps_));
    if (hi < lo) throw std::invalid_argument("covering: region too small for eps grid");
    std::int64_t extent = hi - lo + 1;
    int level = 0;
    while ((std::int64_t{1} << level) < extent) ++level;
    best_ = 0.0;
    found_ = false;
    // seed with a coarse pass so pruning has something to push against
    std::int64_t stride = std::max<std::int64_t>(1, extent / 32);
    for (std::int64_t ix = lo; ix <= hi; ix += stride) {
      for (std::int64_t iy = lo; iy <= hi; iy += stride) {
        evaluate(ix, iy);
      }
    }
    descend(lo, lo, level, lo, hi);
    if (!found_) throw std::invalid_argument("covering: region contains no sample points");
    return best_;
  }

 private:
  void evaluate(std::int64_t ix, std::int64_t iy) {
    double x = static_cast<double>(ix) * eps_;
    double y = static_cast<double>(iy) * eps_;
    double r2 = x * x + y * y;
    if (r2 < r_lo2_ || r2 > r_hi2_) return;
    if (!angle_in_sector(reduce_unit(std::atan2(y, x) /
                                     (2.0 * std::numbers::pi_v<double>)),
                         region_)) {
      return;
    }
    found_ = true;
    best_ = std::max(best_, grid_.nearest_distance(x, y));
  }

  void descend(std::int64_t ix0, std::int64_t iy0, int level, std::int64_t lo,
               std::int64_t hi) {
    if (ix0 > hi || iy0 > hi) return;
    if (level == 0) {
      evaluate(ix0, iy0);
      return;
    }
    std::int64_t size = std::int64_t{1} << level;
    std::int64_t ix1 = std::min(hi, ix0 + size - 1);
    std::int64_t iy1 = std::min(hi, iy0 + size - 1);
    // radial reject on the block's bounding box
    double xa = static_cast<double>(ix0) * eps_, xb = static_cast<double>(ix1) * eps_;
    double ya = static_cast<double>(iy0) * eps_, yb = static_cast<double>(iy1) * eps_;
    double min_ax = std::min(std::abs(xa), std::abs(xb));
    double min_ay = std::min(std::abs(ya), std::abs(yb));
    if (xa * xb < 0.0) min_ax = 0.0;
    if (ya * yb < 0.0) min_ay = 0.0;
    double bbox_min2 = min_ax * min_ax + min_ay * min_ay;
    double mx = std::max(std::abs(xa), std::abs(xb));
    double my = std::max(std::abs(ya), std::abs(yb));
    double bbox_max2 = mx * mx + my * my;
    if (bbox_min2 > r_hi2_ || bbox_max2 < r_lo2_) return;

    double cx = 0.5 * (xa + xb);
    double cy = 0.5 * (ya + yb);
    double half_diag = 0.5 * std::hypot(xb - xa, yb - ya);
    if (found_ && grid_.nearest_distance(cx, cy) + half_diag <= best_) return;

    std::int64_t half = size / 2;
    descend(ix0, iy0, level - 1, lo, hi);
    descend(ix0 + half, iy0, level - 1, lo, hi);
    descend(ix0, iy0 + half, level - 1, lo, hi);
    descend(ix0 + half, iy0 + half, level - 1, lo, hi);
  }

  const PointGrid& grid_;
  const SectorSpec& region_;
  double eps_;
  double r_lo2_ = 0.0, r_hi2_ = 0.0;
  double best_ = 0.0;
  bool found_ = false;
};

}  // namespace

void validate_sector(const SectorSpec& spec) {
  double width = spec.angle_hi - spec.angle_lo;
  if (!(width >= 0.0 && width <= 1.0)) {
    throw std::invalid_argument("sector: angular width must lie in [0, 1]");
  }
  if (!(spec.radius_lo >= 0.0 && spec.radius_hi >= spec.radius_lo)) {
    throw std::invalid_argument("sector: need 0 <= radius_lo <= radius_hi");
  }
}

double packing_radius_bruteforce(std::span<const SpiralPoint> points) {
  if (points.size() < 2) throw std::invalid_argument("packing radius needs >= 2 points");
  double best2 = kInf;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best2 = std::min(best2, pair_dist2(points[i], points[j]));
    }
  }
  return std::sqrt(best2);
}

double packing_radius_grid(std::span<const SpiralPoint> points, double cell_size) {
  if (points.size() < 2) throw std::invalid_argument("packing radius needs >= 2 points");
  if (!(cell_size > 0.0)) throw std::domain_error("cell_size must be > 0");
  double cell = cell_size;
  for (;;) {
    double best2 = min_dist2_bucketed(points, cell);
    if (best2 == kInf) {
      cell *= 2.0;  // all points isolated at this resolution
      continue;
    }
    // Certified once every pair at distance sqrt(best2) was examined; the
    // margin keeps the certificate safe against the rounding of cell^2.
    if (best2 <= cell * cell * (1.0 - 1e-9)) return std::sqrt(best2);
    cell = std::sqrt(best2) * (1.0 + 1e-6);
  }
}

CoveringEstimate covering_radius_estimate(std::span<const SpiralPoint> points,
                                          const SectorSpec& region, double eps) {
  if (points.empty()) throw std::invalid_argument("covering: empty point set");
  validate_sector(region);
  if (!(eps > 0.0)) throw std::domain_error("covering: eps must be > 0");
  PointGrid grid(points, 2.0);
  CoveringScan scan(grid, region, eps);
  double estimate = scan.run();
  return {estimate, eps * std::numbers::sqrt2_v<double> / 2.0};
}

std::int64_t sector_count(const PhaseFamily& family, const SectorSpec& spec) {
  validate_sector(spec);
  std::int64_t first = std::max<std::int64_t>(1, sq_ceil(spec.radius_lo));
  std::int64_t last = sq_floor(spec.radius_hi);
  if (last > family.max_index()) {
    if (family.kind() == PhaseKind::Custom) {
      throw std::out_of_range("sector extends beyond the custom phase list");
    }
    throw PrecisionRangeError("sector extends beyond the validated phase range");
  }
  if (last < first) return 0;
  double width = spec.angle_hi - spec.angle_lo;
  if (width >= 1.0) return last - first + 1;  // full circle: pure index count
  if (width <= 0.0) return 0;
  double base = reduce_unit(spec.angle_lo);
  std::int64_t count = 0;
  for (std::int64_t n = first; n <= last; ++n) {
    double v = frac_phase(family, n) - base;
    if (v < 0.0) v += 1.0;
    if (v < width) ++count;
  }
  return count;
}

double density_ratio(const PhaseFamily& family, const SectorSpec& spec) {
  validate_sector(spec);
  double width = spec.angle_hi - spec.angle_lo;
  if (!(width > 0.0) || !(spec.radius_hi > spec.radius_lo)) {
    throw std::invalid_argument("density_ratio: sector has zero measure");
  }
  double expected = width * (spec.radius_hi - spec.radius_lo) *
                    (spec.radius_hi + spec.radius_lo);
  return static_cast<double>(sector_count(family, spec)) / expected;
}

}  // namespace spiralcert
