#include "spiralcert/spiral.hpp"

#include <cmath>
#include <numbers>

#include "spiralcert/numeric.hpp"

namespace spiralcert {

SpiralPoint point(const PhaseFamily& family, std::int64_t n) {
  double u = frac_phase(family, n);
  double radius = std::sqrt(static_cast<double>(n));
  double theta = 2.0 * std::numbers::pi_v<double> * u;
  return {n, radius, u, radius * std::cos(theta), radius * std::sin(theta)};
}

AnnulusWindow window(double inner_radius, double width) {
  if (!(inner_radius >= 1.0)) throw std::domain_error("window requires inner radius >= 1");
  if (!(width > 0.0)) throw std::domain_error("window requires width > 0");
  std::int64_t first = sq_ceil(inner_radius);
  SquareParts outer = square_parts(inner_radius + width);
  // half-open at the top: n < (R+h)^2
  std::int64_t last = outer.exact ? outer.floor_sq - 1 : outer.floor_sq;
  std::int64_t count = last >= first ? last - first + 1 : 0;
  return {inner_radius, width, first, count};
}

std::vector<SpiralPoint> generate(const PhaseFamily& family, std::int64_t n_max) {
  if (n_max < 1) throw std::out_of_range("n_max must be >= 1");
  std::vector<SpiralPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) pts.push_back(point(family, n));
  return pts;
}

void generate_chunked(const PhaseFamily& family, std::int64_t n_max,
                      const std::function<void(std::span<const SpiralPoint>)>& sink,
                      std::size_t chunk_size) {
  if (n_max < 1) throw std::out_of_range("n_max must be >= 1");
  if (chunk_size == 0) chunk_size = kDefaultChunk;
  std::vector<SpiralPoint> buf;
  buf.reserve(chunk_size);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    buf.push_back(point(family, n));
    if (buf.size() == chunk_size) {
      sink(buf);
      buf.clear();
    }
  }
  if (!buf.empty()) sink(buf);
}

std::int64_t disc_count(double radius) {
  if (!(radius >= 0.0)) throw std::domain_error("radius must be >= 0");
  return sq_floor(radius);
}

}  // namespace spiralcert
