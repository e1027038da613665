#pragma once

#include "lerch/branch.hpp"
#include "lerch/types.hpp"

namespace lerch {

/// Arguments of Phi(z, n, a) = sum_{m >= 0} z^m / (a + m)^n.
///
/// When a route works on the inverse argument the same triple is read as
/// (w, n, b).
struct LerchQuery {
  Complex z;
  int n = 1;
  Complex a;
};

/// Shifts within this distance of an integer are treated as that integer.
inline constexpr double kIntegerShiftTol = 1e-8;
/// Half-width of the band around |z| = 1 handled as the unit circle.
inline constexpr double kUnitBand = 1e-6;
/// Terms summed by the inverse expansion on the unit circle.
inline constexpr int kUnitCircleTerms = 10000;

/// Direct series. |z| < 1, or |z| = 1 with n >= 2.
EvalResult phi_series(const LerchQuery& q, double tol = kDefaultTol);

/// (1/(n-1)!) int_0^inf t^{n-1} e^{-a t} / (1 - z e^{-t}) dt.
/// Re a > 0 and z outside [1, inf).
EvalResult phi_integral(const LerchQuery& q, double tol = kDefaultTol);

/// Principal-value representation for z in the cut unit disc:
///
///   Phi = (-1)^{n-1}/(n-1)! { PV int_0^{inf e^{i phi}} t^{n-1} e^{a t}/(z e^t - 1) dt
///                             + pi d^{n-1}/da^{n-1} (z^{-a} cot(pi a)) },
///
/// phi = arg(-log z). Requires Re a < 1, Re[(a - 1) e^{i phi}] < 0 and
/// a not an integer.
EvalResult phi_pv(const LerchQuery& q, double tol = kDefaultTol);

/// Expansion in powers of 1/w for |w| > 1, w off (1, inf), b = q.a not an
/// integer:
///
///   Phi(w, n, b) = pi/(n-1)! [d^{n-1}/dt^{n-1} w^t (sgn(phi) i - cot(pi t))]_{t=-b}
///                  - sum_{m >= 1} w^{-m} / (b - m)^n.
///
/// Inside the unit band the sum is cut at kUnitCircleTerms with an explicit
/// remainder bound, and `converged` is false when that bound exceeds tol.
EvalResult phi_inverse(const LerchQuery& q, double tol = kDefaultTol);

/// Phi(w, n, N) for positive integer N, as the limit b -> N of the inverse
/// expansion. The finite part of the cotangent term is computed by
/// truncated Laurent arithmetic.
EvalResult phi_integer_a(Complex w, int n, int N, double tol = kDefaultTol);

/// Closed forms of the same limit for n = 1..5; used to cross-check the
/// Laurent route. Throws Domain for other n.
Complex phi_integer_a_explicit(Complex w, int n, int N, double tol = 1e-15);

/// Right-hand side of the reflection between (z, n, a) and (1/z, n, 1 - a):
///
///   Phi(z,n,a) + (-1)^n z^{-1} Phi(1/z,n,1-a) = trig_term.
struct SymmetryRelation {
  LerchQuery partner;
  Complex trig_term;
  int sgn_phi = 0;
};

/// Valid for z off the positive real axis (sgn(phi) != 0), on either side of
/// the unit circle, and a not an integer. Applying it to the partner gives
/// back the original query with sgn(phi) flipped.
SymmetryRelation symmetry_transform(const LerchQuery& q);

/// z * Phi(z, n, a).
EvalResult extended_polylog(Complex z, int n, Complex a,
                            double tol = kDefaultTol);

/// Dispatcher: picks a route from the region of z and the shift a.
EvalResult phi(const LerchQuery& q, double tol = kDefaultTol);

/// Runs one named route (Method::Auto defers to the dispatcher).
EvalResult evaluate(const LerchQuery& q, Method method,
                    double tol = kDefaultTol);

}  // namespace lerch
