#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spiralcert {

// Raised when an index lies beyond the range over which the double-precision
// evaluation meets its stated error bound; callers should fall back to the
// fixed-point oracle.
class PrecisionRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedFamilyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PhaseKind { SqrtLinear, Linear, Power, Custom };

// Index range over which frac_phase of the closed-form families keeps its
// ~1e-9 absolute error budget (it is in fact near machine precision; see
// frac_phase notes in phase.cpp).
inline constexpr std::int64_t kPhaseIndexLimit = std::int64_t{1} << 40;

// A phase sequence xi_n: one of
//   SqrtLinear  xi_n = alpha * sqrt(n),   alpha > 0
//   Linear      xi_n = alpha * n,         alpha != 0
//   Power       xi_n = alpha * n^beta,    alpha != 0, beta > 0 non-integer
//   Custom      xi_n = values[n-1]
class PhaseFamily {
 public:
  static PhaseFamily sqrt_linear(double alpha);
  static PhaseFamily linear(double alpha);
  static PhaseFamily power(double alpha, double beta);
  static PhaseFamily custom(std::vector<double> values);

  PhaseKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<double>& custom_values() const;

  // Largest index accepted by phase()/frac_phase().
  std::int64_t max_index() const;

  std::string describe() const;

  friend bool operator==(const PhaseFamily& a, const PhaseFamily& b);

 private:
  PhaseFamily(PhaseKind kind, double alpha, double beta,
              std::shared_ptr<const std::vector<double>> values)
      : kind_(kind), alpha_(alpha), beta_(beta), values_(std::move(values)) {}

  PhaseKind kind_;
  double alpha_;
  double beta_;
  std::shared_ptr<const std::vector<double>> values_;
};

// Raw value xi_n.
double phase(const PhaseFamily& family, std::int64_t n);

// Fractional part of xi_n, in [0, 1). For SqrtLinear this uses a
// cancellation-free split of sqrt(n) (see phase.cpp) so the absolute error
// stays near machine epsilon across the whole validated index range.
double frac_phase(const PhaseFamily& family, std::int64_t n);

// Validation oracle: frac(xi_n) in 96-fractional-bit fixed point
// (internal error <= 2^-80 before the final rounding to double).
// Supports SqrtLinear and Linear with alpha in [2^-44, 2^16].
double frac_phase_oracle(const PhaseFamily& family, std::int64_t n);

// Alpha flag values: a decimal literal, "sqrt_pi" or "sqrt_golden"
// (sqrt of pi / of the golden ratio, evaluated in long double).
double resolve_alpha(std::string_view spec);

const char* kind_name(PhaseKind kind);

}  // namespace spiralcert
