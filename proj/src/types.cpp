#include "lerch/types.hpp"

#include <cstdio>

namespace lerch {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::PoleAtInteger: return "PoleAtInteger";
    case ErrorKind::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorKind::PoleOffRay: return "PoleOffRay";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::ResidualPole: return "ResidualPole";
    case ErrorKind::DivergentAtOne: return "DivergentAtOne";
    case ErrorKind::NearIntegerShift: return "NearIntegerShift";
  }
  return "Unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Auto: return "auto";
    case Method::Series: return "series";
    case Method::Integral: return "integral";
    case Method::PrincipalValue: return "pv";
    case Method::Inverse: return "inverse";
    case Method::IntegerShift: return "integer-a";
    case Method::Hurwitz: return "hurwitz";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::Auto, Method::Series, Method::Integral,
                   Method::PrincipalValue, Method::Inverse,
                   Method::IntegerShift, Method::Hurwitz}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

const EvalResult& require_converged(const EvalResult& result) {
  if (!result.converged) {
    char achieved[32];
    std::snprintf(achieved, sizeof achieved, "%.3e", result.err_estimate);
    throw LerchError(ErrorKind::ToleranceNotMet,
                     std::string(to_string(result.method)) +
                         ": tolerance not met, achieved error " + achieved);
  }
  return result;
}

}  // namespace lerch
