#pragma once

#include <string_view>

#include "lerch/types.hpp"

namespace lerch {

enum class Region {
  Zero,               // z = 0
  One,                // z = 1
  InsideRealSegment,  // z in (0, 1)
  InsideDiscD,        // 0 < |z| < 1, off the positive real axis
  UnitCircle,         // |z| = 1, z != 1
  Exterior,           // |z| > 1, z not in (1, inf)
  ExteriorRealLine,   // z in (1, inf)
};

std::string_view to_string(Region region);

/// Principal-branch data of a first argument.
///
/// For |z| < 1 the angle is phi = arg(-log z). For |z| >= 1 the argument is
/// read as w and phi = arg(log w); off the negative real axis both
/// conventions agree on the pair (z, 1/z).
struct BranchData {
  Complex log_z;
  double phi = 0.0;
  int sgn_phi = 0;
  Region region = Region::Zero;
  bool on_negative_axis = false;
};

inline constexpr double kUnitCircleTol = 1e-14;

BranchData classify(Complex z);

/// sgn(arg(-log z)) for any z off the positive real axis: the sign attached
/// to z in the symmetry relation between z and 1/z.
int symmetry_sign(Complex z);

/// Distance from a to the nearest integer, and to the nearest non-positive
/// / positive integer.
double distance_to_integer(Complex a);
double distance_to_nonpositive_integer(Complex a);
double distance_to_positive_integer(Complex a);

}  // namespace lerch
