#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "spiralcert/gaps.hpp"
#include "spiralcert/geometry.hpp"
#include "spiralcert/numeric.hpp"

using namespace spiralcert;

namespace {

SpiralPoint at(double x, double y) {
  SpiralPoint p;
  p.x = x;
  p.y = y;
  p.radius = std::hypot(x, y);
  return p;
}

}  // namespace

TEST_CASE("brute-force packing radius on explicit inputs") {
  std::vector<SpiralPoint> dup{at(1.0, 2.0), at(1.0, 2.0)};
  CHECK(packing_radius_bruteforce(dup) == 0.0);
  std::vector<SpiralPoint> tri{at(0.0, 0.0), at(3.0, 4.0), at(0.0, 1.0)};
  CHECK(packing_radius_bruteforce(tri) == 1.0);
  std::vector<SpiralPoint> one{at(0.0, 0.0)};
  CHECK_THROWS_AS(packing_radius_bruteforce(one), std::invalid_argument);
}

TEST_CASE("grid packing equals brute force bit for bit") {
  std::mt19937_64 rng(51);
  const double alphas[] = {0.5, 1.0, resolve_alpha("sqrt_pi"),
                           resolve_alpha("sqrt_golden")};
  const double cells[] = {0.25, 0.5, 1.0, 2.0};
  for (int trial = 0; trial < 10; ++trial) {
    auto n = static_cast<std::int64_t>(100 + rng() % 1400);
    auto fam = PhaseFamily::sqrt_linear(alphas[trial % 4]);
    auto pts = generate(fam, n);
    double ref = packing_radius_bruteforce(pts);
    CHECK(packing_radius_grid(pts, cells[trial % 4]) == ref);
  }
  // degenerate: everything in one cell
  std::vector<SpiralPoint> tight;
  std::uniform_real_distribution<double> u(0.0, 0.1);
  for (int i = 0; i < 40; ++i) tight.push_back(at(u(rng), u(rng)));
  CHECK(packing_radius_grid(tight, 5.0) == packing_radius_bruteforce(tight));
  // collisions through a custom family
  std::vector<double> phases(200, 0.25);
  auto ray = generate(PhaseFamily::custom(phases), 200);
  ray.push_back(ray.front());
  CHECK(packing_radius_grid(ray, 1.0) == 0.0);
}

TEST_CASE("packing fixture: alpha=1, n <= 2000") {
  auto pts = generate(PhaseFamily::sqrt_linear(1.0), 2000);
  double d_star = packing_radius_bruteforce(pts);
  CHECK(d_star == 1.0);  // z_1 = (1,0) and z_4 = (2,0)
  CHECK(packing_radius_grid(pts, 1.0) == d_star);
}

TEST_CASE("grid packing is stable across starting cell sizes") {
  auto pts = generate(PhaseFamily::sqrt_linear(resolve_alpha("sqrt_pi")), 100000);
  double a = packing_radius_grid(pts, 0.5);
  CHECK(packing_radius_grid(pts, 1.0) == a);
  CHECK(packing_radius_grid(pts, 2.0) == a);
  CHECK(a > 0.0);
}

TEST_CASE("covering estimate: single point against a unit disc") {
  std::vector<SpiralPoint> origin{at(0.0, 0.0)};
  auto c = covering_radius_estimate(origin, {0.0, 1.0, 0.0, 1.0}, 0.002);
  CHECK(c.estimate <= 1.0);
  CHECK(c.estimate >= 0.997);
  CHECK(c.slack == doctest::Approx(0.002 * std::numbers::sqrt2 / 2.0));
}

TEST_CASE("covering sandwich against a finer grid") {
  auto pts = generate(PhaseFamily::sqrt_linear(1.0), 400);
  SectorSpec region{0.0, 1.0, 2.0, 10.0};
  auto coarse = covering_radius_estimate(pts, region, 0.2);
  auto fine = covering_radius_estimate(pts, region, 0.02);
  CHECK(fine.estimate >= coarse.estimate);  // aligned grids nest
  CHECK(fine.estimate <= coarse.estimate + coarse.slack);
}

TEST_CASE("covering fixture: alpha=1, points to n=3600, annulus [5,50]") {
  auto pts = generate(PhaseFamily::sqrt_linear(1.0), 3600);
  auto c = covering_radius_estimate(pts, {0.0, 1.0, 5.0, 50.0}, 0.01);
  CHECK(c.estimate == doctest::Approx(1.6419860238).epsilon(1e-9));
  CHECK(std::isfinite(c.estimate));
}

TEST_CASE("covering on a ray sees the empty half-plane") {
  std::vector<double> zeros(400, 0.0);
  auto ray = generate(PhaseFamily::custom(zeros), 400);
  auto c = covering_radius_estimate(ray, {0.0, 1.0, 2.0, 10.0}, 0.05);
  CHECK(c.estimate >= 5.0);
}

TEST_CASE("covering search equals the exhaustive grid max") {
  auto pts = generate(PhaseFamily::sqrt_linear(resolve_alpha("sqrt_golden")), 200);
  SectorSpec region{0.0, 1.0, 2.0, 8.0};
  const double eps = 0.05;
  auto c = covering_radius_estimate(pts, region, eps);
  // exhaustive max over the same aligned sample grid
  double best = 0.0;
  auto lo = static_cast<std::int64_t>(std::ceil(-region.radius_hi / eps));
  auto hi = static_cast<std::int64_t>(std::floor(region.radius_hi / eps));
  for (std::int64_t ix = lo; ix <= hi; ++ix) {
    for (std::int64_t iy = lo; iy <= hi; ++iy) {
      double x = static_cast<double>(ix) * eps;
      double y = static_cast<double>(iy) * eps;
      double r2 = x * x + y * y;
      if (r2 < region.radius_lo * region.radius_lo ||
          r2 > region.radius_hi * region.radius_hi) {
        continue;
      }
      double nearest2 = std::numeric_limits<double>::infinity();
      for (const SpiralPoint& p : pts) {
        double dx = p.x - x, dy = p.y - y;
        nearest2 = std::min(nearest2, dx * dx + dy * dy);
      }
      best = std::max(best, std::sqrt(nearest2));
    }
  }
  CHECK(c.estimate == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("covering validation") {
  std::vector<SpiralPoint> none;
  CHECK_THROWS_AS(covering_radius_estimate(none, {0.0, 1.0, 0.0, 1.0}, 0.1),
                  std::invalid_argument);
  std::vector<SpiralPoint> one{at(1.0, 0.0)};
  CHECK_THROWS_AS(covering_radius_estimate(one, {0.0, 1.0, 0.0, 1.0}, -0.1),
                  std::domain_error);
}

TEST_CASE("sector counts: full circle is the exact disc count") {
  auto fam = PhaseFamily::sqrt_linear(resolve_alpha("sqrt_golden"));
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> ur(1.0, 500.0);
  for (int i = 0; i < 1000; ++i) {
    double r = ur(rng);
    CHECK(sector_count(fam, {0.0, 1.0, 0.0, r}) == sq_floor(r));
  }
  CHECK(sector_count(fam, {0.0, 1.0, 0.0, 100.0}) == 10000);
}

TEST_CASE("sector angular membership is half-open") {
  auto fam = PhaseFamily::custom({0.2, 0.4});
  CHECK(sector_count(fam, {0.2, 0.4, 0.0, 1.7}) == 1);  // 0.2 in, 0.4 out
  CHECK(sector_count(fam, {0.4, 0.6, 0.0, 1.7}) == 1);
  CHECK(sector_count(fam, {0.45, 0.6, 0.0, 1.7}) == 0);
  // wrap-around window
  CHECK(sector_count(fam, {0.9, 1.3, 0.0, 1.7}) == 1);  // [0.9, 0.3) mod 1
  CHECK_THROWS_AS(sector_count(fam, {0.0, 1.0, 0.0, 2.0}), std::out_of_range);
}

TEST_CASE("sector count approximates uniform share") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  std::int64_t c = sector_count(fam, {0.0, 0.5, 0.0, 100.0});
  CHECK(std::abs(static_cast<double>(c) - 5000.0) <= 100.0);  // within 2%
  auto cf = PhaseFamily::custom(std::vector<double>(100, 0.3));
  CHECK(sector_count(cf, {0.4, 0.6, 0.0, 10.0}) == 0);
}

TEST_CASE("density ratio values") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  CHECK(density_ratio(fam, {0.0, 1.0, 0.0, 100.0}) == 1.0);
  auto pi_fam = PhaseFamily::sqrt_linear(resolve_alpha("sqrt_pi"));
  double r = density_ratio(pi_fam, {0.25, 0.75, 50.0, 100.0});
  CHECK(r >= 0.98);
  CHECK(r <= 1.02);
  auto cf = PhaseFamily::custom(std::vector<double>(100, 0.3));
  CHECK(density_ratio(cf, {0.4, 0.6, 0.0, 10.0}) == 0.0);
  CHECK_THROWS_AS(density_ratio(fam, {0.3, 0.3, 0.0, 10.0}), std::invalid_argument);
  CHECK_THROWS_AS(density_ratio(fam, {0.0, 1.0, 5.0, 5.0}), std::invalid_argument);
}

TEST_CASE("points sharing a window respect the chord separation bound") {
  const double alphas[] = {1.0, resolve_alpha("sqrt_pi")};
  for (double alpha : alphas) {
    auto fam = PhaseFamily::sqrt_linear(alpha);
    double h = 0.5 / alpha;
    while (alpha * h > 0.5) h = std::nextafter(h, 0.0);
    for (double radius : {2.0, 5.0, 11.5, 20.0, 29.25}) {
      AnnulusWindow w = window(radius, h);
      if (w.count < 2) continue;
      GapReport rep = window_gaps(fam, radius, h);
      double delta = std::min(0.5, radius * rep.min_gap);
      double bound = 2.0 * radius * std::sin(std::numbers::pi * delta / radius);
      std::vector<SpiralPoint> pts;
      for (std::int64_t n = w.first_index; n < w.first_index + w.count; ++n) {
        pts.push_back(point(fam, n));
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          double d = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
          CHECK(d >= bound * (1.0 - 1e-12));
        }
      }
    }
  }
}
