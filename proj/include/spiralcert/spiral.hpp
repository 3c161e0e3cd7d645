#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spiralcert/phase.hpp"

namespace spiralcert {

// One point z_n = sqrt(n) * e^(2 pi i xi_n).
struct SpiralPoint {
  std::int64_t n = 0;
  double radius = 0.0;      // sqrt(n)
  double phase_frac = 0.0;  // frac(xi_n), in [0, 1)
  double x = 0.0;
  double y = 0.0;
};

// The index window R^2 <= n < (R+h)^2, i.e. points with radius in [R, R+h).
// Boundaries are decided exactly from the binary values of R and R+h.
struct AnnulusWindow {
  double inner_radius = 0.0;
  double width = 0.0;
  std::int64_t first_index = 0;  // smallest n with n >= R^2
  std::int64_t count = 0;        // number of indices in the window

  friend bool operator==(const AnnulusWindow&, const AnnulusWindow&) = default;
};

SpiralPoint point(const PhaseFamily& family, std::int64_t n);

// Requires inner_radius >= 1, width > 0. count can be 0 for narrow windows.
AnnulusWindow window(double inner_radius, double width);

// Points for n = 1..n_max in index order.
std::vector<SpiralPoint> generate(const PhaseFamily& family, std::int64_t n_max);

// Streaming variant: invokes sink with consecutive chunks (buffer reused).
inline constexpr std::size_t kDefaultChunk = std::size_t{1} << 16;
void generate_chunked(const PhaseFamily& family, std::int64_t n_max,
                      const std::function<void(std::span<const SpiralPoint>)>& sink,
                      std::size_t chunk_size = kDefaultChunk);

// Exact number of indices n >= 1 with n <= R^2, i.e. points with
// radius <= R. Integer arithmetic; no boundary rounding.
std::int64_t disc_count(double radius);

}  // namespace spiralcert
