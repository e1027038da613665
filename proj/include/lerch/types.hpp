#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lerch {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Default absolute/relative tolerance for every evaluation route.
inline constexpr double kDefaultTol = 1e-10;

enum class ErrorKind {
  Domain,
  PoleAtInteger,
  PoleAtNonPositiveInteger,
  PoleOffRay,
  ToleranceNotMet,
  ResidualPole,
  DivergentAtOne,
  NearIntegerShift,
};

std::string_view to_string(ErrorKind kind);

class LerchError : public std::runtime_error {
 public:
  LerchError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Which representation produced a value.
enum class Method {
  Auto,
  Series,          // direct power series in z
  Integral,        // Laplace-type integral along the positive real axis
  PrincipalValue,  // principal-value ray integral plus cotangent term
  Inverse,         // convergent expansion in powers of 1/z
  IntegerShift,    // finite-part formula for positive integer shift
  Hurwitz,         // z = 1, order >= 2
  Quadrature,      // raw quadrature result
};

std::string_view to_string(Method method);
/// Parses the CLI spelling ("auto", "series", "integral", "pv", "inverse",
/// "integer-a", "hurwitz"). Throws std::invalid_argument on anything else.
Method method_from_string(std::string_view name);

struct EvalResult {
  Complex value{};
  double err_estimate = 0.0;
  Method method = Method::Auto;
  std::int64_t work = 0;  // terms summed or integrand evaluations
  bool converged = true;
};

/// Throws ToleranceNotMet when a route gave up before reaching its target.
const EvalResult& require_converged(const EvalResult& result);

/// |x - y| / max(1, |y|): absolute for small values, relative for large.
inline double mixed_error(Complex x, Complex y) {
  const double scale = std::abs(y) > 1.0 ? std::abs(y) : 1.0;
  return std::abs(x - y) / scale;
}

}  // namespace lerch
