#pragma once

#include <functional>

#include "lerch/types.hpp"

namespace lerch {

/// Integrand along the ray t = r e^{i direction}, r >= 0, decaying at least
/// like exp(-decay_rate * r).
struct RayIntegrand {
  std::function<Complex(Complex)> evaluate;
  double direction = 0.0;  // in (-pi/2, pi/2)
  double decay_rate = 1.0;
};

/// A simple pole sitting on the integration ray.
struct PoleSpec {
  Complex location;
  int order = 1;
};

struct QuadratureOptions {
  /// Upper bound on the number of Gauss-Kronrod panels.
  int max_panels = 60000;
  /// Extra nats added to log(1/tol) when choosing the truncation point.
  double truncation_safety = 5.0;
};

/// Integral of f along the ray from 0 to infinity.
///
/// The ray is truncated at T = (log(1/tol) + safety) / decay_rate, pushed
/// further out while the sampled tail |f(T)| / decay_rate is above tol/4, and
/// [0, T] is integrated by globally adaptive 7/15-point Gauss-Kronrod
/// bisection. The tolerance is mixed: the target is tol * max(1, |I|).
/// Never throws on a missed tolerance; `converged` reports it instead.
EvalResult integrate_ray(const RayIntegrand& f, double tol,
                         const QuadratureOptions& options = {});

/// Cauchy principal value of the ray integral through a simple pole.
///
/// Inside the window t0 +- delta e^{i direction}, delta = min(|t0|/2, 1), the
/// integrand is folded as g(u) = f(t0 + u) + f(t0 - u), which is regular at
/// u = 0; outside it the ordinary ray rule applies. All pieces share one
/// global error budget. Throws PoleOffRay if the pole is not on the ray.
EvalResult pv_integrate_ray(const RayIntegrand& f, const PoleSpec& pole,
                            double tol, const QuadratureOptions& options = {});

/// Globally adaptive Gauss-Kronrod over the real segment [lo, hi] of a
/// complex-valued function; the building block for the ray rules.
EvalResult integrate_segment(const std::function<Complex(double)>& f,
                             double lo, double hi, double tol,
                             const QuadratureOptions& options = {});

}  // namespace lerch
