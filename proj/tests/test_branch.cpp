#include <doctest.h>

#include <cmath>

#include "lerch/branch.hpp"

using namespace lerch;

TEST_CASE("classify regions") {
  CHECK(classify(0.0).region == Region::Zero);
  CHECK(classify(1.0).region == Region::One);
  CHECK(classify(0.5).region == Region::InsideRealSegment);
  CHECK(classify(Complex(0, 0.5)).region == Region::InsideDiscD);
  CHECK(classify(Complex(0, 1)).region == Region::UnitCircle);
  CHECK(classify(-1.0).region == Region::UnitCircle);
  CHECK(classify(Complex(0, 2)).region == Region::Exterior);
  CHECK(classify(3.0).region == Region::ExteriorRealLine);
  CHECK(classify(1.0 + 1e-15).region == Region::One);
  CHECK(classify(Complex(0.5, 1e-16)).region == Region::InsideRealSegment);
}

TEST_CASE("branch angle and its sign") {
  // -log(0.5 i) = ln 2 - i pi/2: phi below the real axis.
  const auto b = classify(Complex(0, 0.5));
  CHECK(b.sgn_phi == -1);
  CHECK(b.phi == doctest::Approx(std::atan2(-kPi / 2, std::log(2.0))));
  CHECK(b.log_z.imag() == doctest::Approx(kPi / 2));

  const auto pos = classify(0.5);
  CHECK(pos.sgn_phi == 0);
  CHECK(pos.phi == 0.0);

  // w-convention outside the disc: log(-2) = ln 2 + i pi.
  const auto neg = classify(-2.0);
  CHECK(neg.region == Region::Exterior);
  CHECK(neg.on_negative_axis);
  CHECK(neg.sgn_phi == +1);
  CHECK(neg.phi == doctest::Approx(std::atan2(kPi, std::log(2.0))));

  // Inside the disc on the negative axis -log z has arg -pi.
  CHECK(classify(-0.5).sgn_phi == -1);
}

TEST_CASE("symmetry sign is the inner convention on both sides") {
  for (Complex z : {Complex(0, 0.5), Complex(-0.3, -0.2), Complex(1.5, 2.0), Complex(-3, 0.1)}) {
    CHECK(symmetry_sign(z) == -symmetry_sign(1.0 / z));
  }
  CHECK(symmetry_sign(Complex(0, 0.5)) == -1);
  CHECK(symmetry_sign(Complex(0, 2)) == -1);
  CHECK(symmetry_sign(Complex(0, -2)) == +1);
  CHECK(symmetry_sign(2.0) == 0);
  CHECK(symmetry_sign(0.0) == 0);
}

TEST_CASE("distances to the integers") {
  CHECK(distance_to_integer(Complex(2.25, 0)) == doctest::Approx(0.25));
  CHECK(distance_to_integer(Complex(-0.9, 0.3)) == doctest::Approx(std::hypot(0.1, 0.3)));
  CHECK(distance_to_nonpositive_integer(Complex(2.2, 0)) == doctest::Approx(2.2));
  CHECK(distance_to_nonpositive_integer(Complex(-2.2, 0)) == doctest::Approx(0.2));
  CHECK(distance_to_positive_integer(Complex(0.1, 0)) == doctest::Approx(0.9));
  CHECK(distance_to_positive_integer(Complex(3.0 + 1e-9, 0)) == doctest::Approx(1e-9));
}
