#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

// Error-free floating-point transforms and exact integer tests on squares
// of doubles. These underpin every boundary decision in the library: index
// windows, disc counts and sector bounds are all decided in integer
// arithmetic derived from the exact binary value of a double.

namespace spiralcert {

struct DoubleWord {
  double hi = 0.0;
  double lo = 0.0;
};

// Knuth two-sum: a + b = hi + lo exactly.
inline DoubleWord two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline DoubleWord fast_two_sum(double a, double b) {
  double s = a + b;
  double err = (a - s) + b;
  return {s, err};
}

// a * b = hi + lo exactly (no overflow/underflow assumed).
inline DoubleWord two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// floor(sqrt(n)) for n >= 0, exact.
inline std::int64_t isqrt_i64(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt_i64: negative argument");
  auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (k > 0 && k * k > n) --k;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

struct SquareParts {
  std::int64_t floor_sq;  // floor(x^2)
  bool exact;             // x^2 is exactly an integer
};

// Exact floor of x^2 for a double x in [0, 2^31). Decomposes x = m * 2^e
// with integer m <= 2^53, so x^2 = m^2 * 2^(2e) fits in 128 bits and the
// floor and the integrality test are both exact.
inline SquareParts square_parts(double x) {
  if (!(x >= 0.0) || !(x < 2147483648.0)) {
    throw std::domain_error("square_parts: argument out of [0, 2^31)");
  }
  if (x == 0.0) return {0, true};
  if (x < 1.0) return {0, false};
  int e2 = 0;
  double f = std::frexp(x, &e2);  // x = f * 2^e2, f in [0.5, 1)
  auto m = static_cast<unsigned long long>(std::ldexp(f, 53));
  int e = e2 - 53;  // x = m * 2^e exactly
  unsigned __int128 sq = static_cast<unsigned __int128>(m) * m;
  int s = -2 * e;
  if (s <= 0) {
    return {static_cast<std::int64_t>(sq << (-s)), true};
  }
  // x >= 1 implies e2 >= 1, hence s <= 104 < 128.
  unsigned __int128 fl = sq >> s;
  bool exact = (sq & (((static_cast<unsigned __int128>(1)) << s) - 1)) == 0;
  return {static_cast<std::int64_t>(fl), exact};
}

inline std::int64_t sq_floor(double x) { return square_parts(x).floor_sq; }

// Smallest integer >= x^2.
inline std::int64_t sq_ceil(double x) {
  SquareParts p = square_parts(x);
  return p.exact ? p.floor_sq : p.floor_sq + 1;
}

// Reduce to [0, 1). Values that round up to 1.0 wrap to 0.0, which is the
// nearest representative mod 1.
inline double reduce_unit(double t) {
  double u = t - std::floor(t);
  if (u < 0.0) u += 1.0;
  if (u >= 1.0) u = 0.0;
  return u;
}

// Distance on the unit circle R/Z.
inline double circular_distance(double u, double v) {
  double d = std::abs(u - v);
  return std::min(d, 1.0 - d);
}

}  // namespace spiralcert
