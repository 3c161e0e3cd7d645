#include <doctest.h>

#include <cmath>
#include <random>

#include "spiralcert/numeric.hpp"
#include "spiralcert/phase.hpp"

using namespace spiralcert;

TEST_CASE("family construction validates parameters") {
  CHECK_THROWS_AS(PhaseFamily::sqrt_linear(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PhaseFamily::sqrt_linear(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhaseFamily::linear(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PhaseFamily::power(1.0, 2.0), std::invalid_argument);  // integer beta
  CHECK_THROWS_AS(PhaseFamily::power(1.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(PhaseFamily::power(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(PhaseFamily::custom({}), std::invalid_argument);
  CHECK_NOTHROW(PhaseFamily::power(2.0, 1.5));
  CHECK_NOTHROW(PhaseFamily::linear(-0.25));
}

TEST_CASE("raw phase values") {
  CHECK(phase(PhaseFamily::sqrt_linear(1.0), 4) == 2.0);
  CHECK(phase(PhaseFamily::linear(0.5), 6) == 3.0);
  CHECK(phase(PhaseFamily::sqrt_linear(1.0), 2) ==
        doctest::Approx(1.4142135623).epsilon(1e-10));
  CHECK(phase(PhaseFamily::power(1.0, 1.5), 4) == doctest::Approx(8.0));
  CHECK(phase(PhaseFamily::custom({0.25, 7.5}), 2) == 7.5);
}

TEST_CASE("fractional phase values") {
  CHECK(frac_phase(PhaseFamily::sqrt_linear(1.0), 4) == 0.0);
  CHECK(frac_phase(PhaseFamily::sqrt_linear(0.5), 16) == 0.0);
  CHECK(frac_phase(PhaseFamily::sqrt_linear(1.0), 2) ==
        doctest::Approx(0.4142135623).epsilon(1e-10));
  CHECK(frac_phase(PhaseFamily::linear(1.0), 12345) == 0.0);
  CHECK(frac_phase(PhaseFamily::custom({7.5}), 1) == 0.5);
}

TEST_CASE("oracle digits and trivial families") {
  double v = frac_phase_oracle(PhaseFamily::sqrt_linear(1.0), 2);
  CHECK(std::abs(v - 0.414213562373095) < 1e-14);  // sqrt(2) - 1
  CHECK(frac_phase_oracle(PhaseFamily::linear(1.0), 999999) == 0.0);
  CHECK(frac_phase_oracle(PhaseFamily::linear(2.5), 3) == 0.5);
  CHECK_THROWS_AS(frac_phase_oracle(PhaseFamily::custom({0.5}), 1),
                  UnsupportedFamilyError);
  CHECK_THROWS_AS(frac_phase_oracle(PhaseFamily::power(1.0, 0.5), 1),
                  UnsupportedFamilyError);
}

TEST_CASE("oracle cross-check at the top of the range") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  std::int64_t n = 1000000000000;  // 1e12 (a perfect square: 10^6 squared)
  CHECK(circular_distance(frac_phase(fam, n), frac_phase_oracle(fam, n)) <= 1e-9);
  std::int64_t m = n + 7;
  CHECK(circular_distance(frac_phase(fam, m), frac_phase_oracle(fam, m)) <= 1e-9);
}

TEST_CASE("fast path agrees with the oracle over the whole range") {
  const double alphas[] = {0.5, 1.0, resolve_alpha("sqrt_pi")};
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> dist(1, std::int64_t{1} << 40);
  for (double alpha : alphas) {
    auto fam = PhaseFamily::sqrt_linear(alpha);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      std::int64_t n = dist(rng);
      worst = std::max(
          worst, circular_distance(frac_phase(fam, n), frac_phase_oracle(fam, n)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("frac_phase stays inside [0,1)") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::int64_t> dist(1, 1 << 20);
  const PhaseFamily fams[] = {
      PhaseFamily::sqrt_linear(resolve_alpha("sqrt_golden")),
      PhaseFamily::linear(1.0 / 3.0),
      PhaseFamily::power(0.7, 0.5),
  };
  for (const auto& fam : fams) {
    for (int i = 0; i < 5000; ++i) {
      double v = frac_phase(fam, dist(rng));
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
    }
  }
}

TEST_CASE("perfect squares with integer alpha*k give exactly zero") {
  for (std::int64_t k = 1; k <= 300; ++k) {
    CHECK(frac_phase(PhaseFamily::sqrt_linear(1.0), k * k) == 0.0);
    CHECK(frac_phase(PhaseFamily::sqrt_linear(3.0), k * k) == 0.0);
    if (k % 2 == 0) CHECK(frac_phase(PhaseFamily::sqrt_linear(0.5), k * k) == 0.0);
    if (k % 4 == 0) CHECK(frac_phase(PhaseFamily::sqrt_linear(0.25), k * k) == 0.0);
  }
}

TEST_CASE("raw sqrt-family phases increase strictly") {
  const double alphas[] = {0.5, 1.0, resolve_alpha("sqrt_pi")};
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> dist(1, (std::int64_t{1} << 40) - 2);
  for (double alpha : alphas) {
    auto fam = PhaseFamily::sqrt_linear(alpha);
    for (int i = 0; i < 5000; ++i) {
      std::int64_t n = dist(rng);
      CHECK(phase(fam, n + 1) > phase(fam, n));
    }
  }
}

TEST_CASE("index validation") {
  auto fam = PhaseFamily::sqrt_linear(1.0);
  CHECK_THROWS_AS(phase(fam, 0), std::out_of_range);
  CHECK_THROWS_AS(frac_phase(fam, (std::int64_t{1} << 40) + 1), PrecisionRangeError);
  auto cf = PhaseFamily::custom({0.1, 0.2});
  CHECK_THROWS_AS(phase(cf, 3), std::out_of_range);
  CHECK(cf.max_index() == 2);
}

TEST_CASE("named alpha constants and literal round-trip") {
  double sp = resolve_alpha("sqrt_pi");
  CHECK(sp == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-15));
  double sg = resolve_alpha("sqrt_golden");
  CHECK(sg * sg == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(resolve_alpha("0.125") == 0.125);
  CHECK(resolve_alpha("1e-3") == 1e-3);
  CHECK_THROWS_AS(resolve_alpha("pi"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_alpha("1.5x"), std::invalid_argument);
}
