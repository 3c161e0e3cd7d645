#include "spiralcert/phase.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "spiralcert/numeric.hpp"
#include "spiralcert/wideint.hpp"

namespace spiralcert {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

void check_index(const PhaseFamily& family, std::int64_t n) {
  if (n < 1) throw std::out_of_range("index must be >= 1");
  if (family.kind() == PhaseKind::Custom) {
    if (n > family.max_index()) {
      throw std::out_of_range("index exceeds custom phase list");
    }
    return;
  }
  if (n > kPhaseIndexLimit) {
    throw PrecisionRangeError("index exceeds validated precision range (2^40)");
  }
}

// frac(alpha * k) for integer k, via an exact two-word product. The product
// alpha*k needs up to ~73 significand bits; hi alone would lose the
// fractional part, hi+lo keeps it exactly.
double frac_of_int_multiple(double alpha, double k) {
  DoubleWord p = two_prod(alpha, k);
  double fh = p.hi - std::floor(p.hi);  // exact (Sterbenz)
  return fh + p.lo;                     // may fall slightly outside [0,1)
}

// frac(alpha * sqrt(n)) without the cancellation of the naive route.
// Split sqrt(n) = k + f with k = isqrt(n) and f = (n - k^2)/(sqrt(n) + k),
// f in [0, 1). Then frac(alpha sqrt n) = frac(frac(alpha k) + alpha f).
// Error budget for n <= 2^40: the k-part is exact to one rounding, f has
// relative error of a few eps, so the total absolute error is
// O((1 + alpha) * eps) -- orders of magnitude inside the 1e-9 contract.
double frac_sqrt_linear(double alpha, std::int64_t n) {
  std::int64_t k = isqrt_i64(n);
  std::int64_t r = n - k * k;
  double t = frac_of_int_multiple(alpha, static_cast<double>(k));
  if (r != 0) {
    double sn = std::sqrt(static_cast<double>(n));
    double f = static_cast<double>(r) / (sn + static_cast<double>(k));
    t += alpha * f;
  }
  return reduce_unit(t);
}

double frac_linear(double alpha, std::int64_t n) {
  return reduce_unit(frac_of_int_multiple(alpha, static_cast<double>(n)));
}

// alpha as an exact Q32.96 fixed-point value. Exact only when alpha's last
// significand bit is no finer than 2^-96, i.e. alpha >= 2^-44; the upper
// bound keeps the oracle's truncation error below 2^-80.
u128 alpha_fixed96(double alpha) {
  if (!(alpha >= std::ldexp(1.0, -44) && alpha <= 65536.0)) {
    throw std::domain_error("oracle requires alpha in [2^-44, 2^16]");
  }
  int e2 = 0;
  double f = std::frexp(alpha, &e2);
  auto m = static_cast<std::uint64_t>(std::ldexp(f, 53));
  int shift = e2 - 53 + 96;
  return static_cast<u128>(m) << shift;
}

double fraction_bits_to_double(std::uint64_t top, std::uint64_t next) {
  double d = std::ldexp(static_cast<double>(top), -64) +
             std::ldexp(static_cast<double>(next), -128);
  if (d >= 1.0) d = 1.0 - std::numeric_limits<double>::epsilon() / 2;
  return d;
}

}  // namespace

PhaseFamily PhaseFamily::sqrt_linear(double alpha) {
  require_finite(alpha, "alpha");
  if (!(alpha > 0.0)) throw std::invalid_argument("sqrt family requires alpha > 0");
  return PhaseFamily(PhaseKind::SqrtLinear, alpha, 0.0, nullptr);
}

PhaseFamily PhaseFamily::linear(double alpha) {
  require_finite(alpha, "alpha");
  if (alpha == 0.0) throw std::invalid_argument("linear family requires alpha != 0");
  return PhaseFamily(PhaseKind::Linear, alpha, 0.0, nullptr);
}

PhaseFamily PhaseFamily::power(double alpha, double beta) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  if (alpha == 0.0) throw std::invalid_argument("power family requires alpha != 0");
  if (!(beta > 0.0)) throw std::invalid_argument("power family requires beta > 0");
  if (std::floor(beta) == beta) {
    throw std::invalid_argument("power family requires a non-integer exponent");
  }
  return PhaseFamily(PhaseKind::Power, alpha, beta, nullptr);
}

PhaseFamily PhaseFamily::custom(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("custom family requires at least one value");
  for (double v : values) require_finite(v, "custom value");
  auto shared = std::make_shared<const std::vector<double>>(std::move(values));
  return PhaseFamily(PhaseKind::Custom, 0.0, 0.0, std::move(shared));
}

const std::vector<double>& PhaseFamily::custom_values() const {
  if (!values_) throw std::logic_error("not a custom family");
  return *values_;
}

std::int64_t PhaseFamily::max_index() const {
  if (kind_ == PhaseKind::Custom) return static_cast<std::int64_t>(values_->size());
  return kPhaseIndexLimit;
}

std::string PhaseFamily::describe() const {
  char buf[96];
  switch (kind_) {
    case PhaseKind::SqrtLinear:
      std::snprintf(buf, sizeof buf, "sqrt(alpha=%.17g)", alpha_);
      break;
    case PhaseKind::Linear:
      std::snprintf(buf, sizeof buf, "linear(alpha=%.17g)", alpha_);
      break;
    case PhaseKind::Power:
      std::snprintf(buf, sizeof buf, "power(alpha=%.17g, beta=%.17g)", alpha_, beta_);
      break;
    case PhaseKind::Custom:
      std::snprintf(buf, sizeof buf, "custom(%zu values)", values_->size());
      break;
  }
  return buf;
}

bool operator==(const PhaseFamily& a, const PhaseFamily& b) {
  if (a.kind_ != b.kind_ || a.alpha_ != b.alpha_ || a.beta_ != b.beta_) return false;
  if (a.kind_ == PhaseKind::Custom) return *a.values_ == *b.values_;
  return true;
}

double phase(const PhaseFamily& family, std::int64_t n) {
  check_index(family, n);
  switch (family.kind()) {
    case PhaseKind::SqrtLinear:
      return family.alpha() * std::sqrt(static_cast<double>(n));
    case PhaseKind::Linear:
      return family.alpha() * static_cast<double>(n);
    case PhaseKind::Power:
      return family.alpha() * std::pow(static_cast<double>(n), family.beta());
    case PhaseKind::Custom:
      return family.custom_values()[static_cast<std::size_t>(n - 1)];
  }
  throw std::logic_error("unreachable");
}

double frac_phase(const PhaseFamily& family, std::int64_t n) {
  check_index(family, n);
  switch (family.kind()) {
    case PhaseKind::SqrtLinear:
      return frac_sqrt_linear(family.alpha(), n);
    case PhaseKind::Linear:
      return frac_linear(family.alpha(), n);
    case PhaseKind::Power: {
      // Direct evaluation; error grows with the magnitude of xi_n. Kept for
      // comparison experiments, not for exact-bound assertions.
      double v = phase(family, n);
      return reduce_unit(v);
    }
    case PhaseKind::Custom:
      return reduce_unit(family.custom_values()[static_cast<std::size_t>(n - 1)]);
  }
  throw std::logic_error("unreachable");
}

double frac_phase_oracle(const PhaseFamily& family, std::int64_t n) {
  if (n < 1) throw std::out_of_range("index must be >= 1");
  if (n > kPhaseIndexLimit) throw std::out_of_range("oracle supports n <= 2^40");
  switch (family.kind()) {
    case PhaseKind::SqrtLinear: {
      u128 a = alpha_fixed96(family.alpha());
      // S = floor(sqrt(n) * 2^96), exact via a 256-bit integer square root.
      U256 radicand{};
      radicand.w[3] = static_cast<std::uint64_t>(n);  // n << 192
      u128 s = isqrt_u256(radicand);
      // P = a * s = alpha * sqrt(n) * 2^192 (up to the 2^-96 truncation of S).
      U256 p = mul_u128(a, s);
      return fraction_bits_to_double(p.w[2], p.w[1]);
    }
    case PhaseKind::Linear: {
      u128 a = alpha_fixed96(family.alpha());
      U256 p = mul_u128(a, static_cast<u128>(n));  // alpha * n * 2^96, exact
      // fractional part = low 96 bits
      std::uint64_t top = (p.w[1] << 32) | (p.w[0] >> 32);
      std::uint64_t next = p.w[0] << 32;
      return fraction_bits_to_double(top, next);
    }
    default:
      throw UnsupportedFamilyError("oracle supports the sqrt and linear families only");
  }
}

double resolve_alpha(std::string_view spec) {
  if (spec == "sqrt_pi") {
    long double pi = std::acos(-1.0L);
    return static_cast<double>(std::sqrt(pi));
  }
  if (spec == "sqrt_golden") {
    long double golden = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return static_cast<double>(std::sqrt(golden));
  }
  std::string buf(spec);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0') {
    throw std::invalid_argument("alpha must be a decimal literal, sqrt_pi or sqrt_golden");
  }
  return v;
}

const char* kind_name(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::SqrtLinear: return "sqrt";
    case PhaseKind::Linear: return "linear";
    case PhaseKind::Power: return "power";
    case PhaseKind::Custom: return "custom";
  }
  return "?";
}

}  // namespace spiralcert
