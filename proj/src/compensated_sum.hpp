#pragma once

#include <cmath>

#include "lerch/types.hpp"

namespace lerch::detail {

/// Neumaier-compensated complex accumulator; also tracks sum |x| for a
/// rounding-error estimate.
class CompensatedSum {
 public:
  void add(Complex x) {
    re_.add(x.real());
    im_.add(x.imag());
    magnitude_ += std::abs(x);
  }
  Complex value() const { return {re_.value(), im_.value()}; }
  double magnitude() const { return magnitude_; }

 private:
  struct Part {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    double value() const { return sum + comp; }
  };
  Part re_, im_;
  double magnitude_ = 0.0;
};

}  // namespace lerch::detail
