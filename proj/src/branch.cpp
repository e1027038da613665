#include "lerch/branch.hpp"

#include <cmath>
#include <limits>

namespace lerch {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Zero: return "Zero";
    case Region::One: return "One";
    case Region::InsideRealSegment: return "InsideRealSegment";
    case Region::InsideDiscD: return "InsideDiscD";
    case Region::UnitCircle: return "UnitCircle";
    case Region::Exterior: return "Exterior";
    case Region::ExteriorRealLine: return "ExteriorRealLine";
  }
  return "Unknown";
}

BranchData classify(Complex z) {
  BranchData out;
  const double r = std::abs(z);
  if (r == 0.0) {
    out.region = Region::Zero;
    out.log_z = {-std::numeric_limits<double>::infinity(), 0.0};
    return out;
  }
  out.log_z = std::log(z);
  const bool real_axis = std::abs(z.imag()) <= kUnitCircleTol * r;
  const bool positive_real = real_axis && z.real() > 0.0;
  out.on_negative_axis = real_axis && z.real() < 0.0;

  if (std::abs(r - 1.0) <= kUnitCircleTol) {
    out.region = positive_real ? Region::One : Region::UnitCircle;
  } else if (r < 1.0) {
    out.region = positive_real ? Region::InsideRealSegment : Region::InsideDiscD;
  } else {
    out.region = positive_real ? Region::ExteriorRealLine : Region::Exterior;
  }

  if (positive_real) {
    out.phi = 0.0;
    out.sgn_phi = 0;
    return out;
  }
  // Inside the disc phi = arg(-log z); elsewhere z is read as w and
  // phi = arg(log w). On the negative axis the principal log has arg = pi,
  // which gives sgn(phi) = -1 inside and +1 outside.
  const Complex oriented = (r < 1.0 - kUnitCircleTol) ? -out.log_z : out.log_z;
  out.phi = std::arg(oriented);
  out.sgn_phi = sign_of(oriented.imag());
  return out;
}

int symmetry_sign(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0 || (std::abs(z.imag()) <= kUnitCircleTol * r && z.real() > 0.0)) {
    return 0;
  }
  return sign_of((-std::log(z)).imag());
}

double distance_to_integer(Complex a) {
  return std::abs(a - std::round(a.real()));
}

double distance_to_nonpositive_integer(Complex a) {
  const double nearest = std::min(0.0, std::round(a.real()));
  return std::abs(a - nearest);
}

double distance_to_positive_integer(Complex a) {
  const double nearest = std::max(1.0, std::round(a.real()));
  return std::abs(a - nearest);
}

}  // namespace lerch
