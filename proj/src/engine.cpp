#include "lerch/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "compensated_sum.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/series_algebra.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::int64_t kMaxSeriesTerms = 50'000'000;

void check_order(int n) {
  if (n < 1) {
    throw LerchError(ErrorKind::Domain,
                     "order n must be a positive integer, got " +
                         std::to_string(n));
  }
}

void check_shift_pole(Complex a) {
  if (distance_to_nonpositive_integer(a) < kIntegerShiftTol) {
    throw LerchError(ErrorKind::PoleAtNonPositiveInteger,
                     "Phi has a pole of order n at a = " +
                         std::to_string(std::round(a.real())));
  }
}

bool positive_real(Complex z) {
  return std::abs(z.imag()) <= kUnitCircleTol * std::abs(z) && z.real() > 0.0;
}

bool within(double err, double tol, Complex value) {
  return err <= tol * std::max(1.0, std::abs(value));
}

/// sum_j C(n-1, j) base^{n-1-j} h_j, with h_0 = head and h_j = tail(j).
template <class Tail>
Complex leibniz(int n, Complex base, Complex head, Tail&& tail) {
  Complex sum{};
  for (int j = 0; j <= n - 1; ++j) {
    const Complex h = (j == 0) ? head : tail(j);
    sum += binomial(n - 1, j) * ipow(base, n - 1 - j) * h;
  }
  return sum;
}

/// lim_{eps -> 0} { pi/(n-1)! d^{n-1}/deps^{n-1} (-w^eps cot(pi eps))
///                  - (-1)^n / eps^n }.
Complex integer_shift_finite_part(Complex log_w, int n) {
  const auto product = cot_pi_laurent(n - 1) * exp_series(log_w, n);
  const auto derivative =
      Complex(-kPi / factorial(n - 1)) * differentiate(product, n - 1);
  const auto pole = TruncatedLaurentSeries::monomial(
      (n % 2 == 0) ? 1.0 : -1.0, -n, derivative.order());
  return finite_part_limit(derivative - pole);
}

}  // namespace

EvalResult phi_series(const LerchQuery& q, double tol) {
  check_order(q.n);
  check_shift_pole(q.a);
  const double r = std::abs(q.z);
  const bool unit = std::abs(r - 1.0) <= kUnitCircleTol;
  if (r > 1.0 + kUnitCircleTol) {
    throw LerchError(ErrorKind::Domain, "series route needs |z| <= 1");
  }
  if (unit && q.n < 2) {
    throw LerchError(ErrorKind::Domain,
                     "series route on |z| = 1 needs order n >= 2");
  }

  EvalResult out;
  out.method = Method::Series;
  if (r == 0.0) {
    out.value = 1.0 / ipow(q.a, q.n);
    out.work = 1;
    return out;
  }

  detail::CompensatedSum sum;
  const double theta = std::arg(q.z);
  Complex power = 1.0;  // z^m
  double tail = std::numeric_limits<double>::infinity();
  std::int64_t m = 0;
  for (; m < kMaxSeriesTerms; ++m) {
    sum.add(power / ipow(q.a + static_cast<double>(m), q.n));
    // Resynchronize z^m now and then so rounding does not build up.
    if ((m + 1) % 256 == 0) {
      power = std::polar(std::pow(r, static_cast<double>(m + 1)),
                         theta * static_cast<double>(m + 1));
    } else {
      power *= q.z;
    }
    const double base = static_cast<double>(m) + 1.0 + q.a.real();
    if (base <= 1.0) continue;
    if (unit) {
      // sum_{k > m} |a + k|^{-n} <= int_m^inf (x + Re a)^{-n} dx
      tail = 1.0 / ((q.n - 1) * std::pow(base - 1.0, q.n - 1));
    } else {
      tail = std::pow(r, static_cast<double>(m + 1)) /
             ((1.0 - r) * std::pow(base, q.n));
    }
    if (tail <= 0.5 * tol * std::max(1.0, std::abs(sum.value()))) break;
  }
  out.value = sum.value();
  out.work = m + 1;
  out.err_estimate = tail + 4.0 * kEps * sum.magnitude();
  out.converged = within(out.err_estimate, tol, out.value);
  return out;
}

namespace {

/// Direction for the integral route. Turning the ray towards -arg(a) makes
/// e^{-a t} decay at rate |a| instead of Re a, which matters for small Re a.
/// The ray stays within pi/4 of the real axis and halfway short of the
/// nearest pole of 1 / (1 - z e^{-t}), so the rotation crosses no pole.
double integral_ray_angle(Complex z, Complex a) {
  double lo = -kPi / 4.0;
  double hi = kPi / 4.0;
  if (std::abs(z) > 0.0) {
    const Complex log_z = std::log(z);
    for (int k = -1; k <= 1; ++k) {
      const double angle = std::atan2(log_z.imag() + 2.0 * kPi * k, log_z.real());
      if (angle > 0.0) hi = std::min(hi, 0.5 * angle);
      if (angle < 0.0) lo = std::max(lo, 0.5 * angle);
    }
  }
  return std::clamp(-std::arg(a), lo, hi);
}

}  // namespace

EvalResult phi_integral(const LerchQuery& q, double tol) {
  check_order(q.n);
  if (!(q.a.real() > 0.0)) {
    throw LerchError(ErrorKind::Domain, "integral route needs Re a > 0");
  }
  if (positive_real(q.z) && std::abs(q.z) >= 1.0 - kUnitCircleTol) {
    throw LerchError(ErrorKind::Domain,
                     "integral route needs z outside [1, inf)");
  }
  const int n = q.n;
  const Complex z = q.z;
  const Complex a = q.a;
  const double scale = 1.0 / factorial(n - 1);
  const double angle = integral_ray_angle(z, a);
  RayIntegrand f{
      [n, z, a, scale](Complex t) {
        return scale * ipow(t, n - 1) * std::exp(-a * t) /
               (1.0 - z * std::exp(-t));
      },
      angle, (a * std::polar(1.0, angle)).real()};
  EvalResult out = integrate_ray(f, tol);
  out.method = Method::Integral;
  return out;
}

EvalResult phi_pv(const LerchQuery& q, double tol) {
  check_order(q.n);
  const BranchData branch = classify(q.z);
  if ((branch.region != Region::InsideDiscD &&
       branch.region != Region::InsideRealSegment) ||
      branch.on_negative_axis) {
    throw LerchError(ErrorKind::Domain,
                     "principal-value route needs z in the cut unit disc");
  }
  if (distance_to_integer(q.a) < kIntegerShiftTol) {
    throw LerchError(ErrorKind::PoleAtInteger,
                     "principal-value route needs a non-integer shift");
  }
  const Complex pole = -branch.log_z;
  const double phi = std::arg(pole);
  const Complex direction = std::polar(1.0, phi);
  const double decay = -((q.a - 1.0) * direction).real();
  if (!(q.a.real() < 1.0) || !(decay > 0.0)) {
    throw LerchError(ErrorKind::Domain,
                     "principal-value route needs Re(a-1) < 0 and "
                     "Re[(a-1) e^{i phi}] < 0");
  }

  const int n = q.n;
  const Complex z = q.z;
  const Complex a = q.a;
  const double fact = factorial(n - 1);
  // t^{n-1} e^{a t} / (z e^t - 1), rewritten so e^t never overflows.
  RayIntegrand f{
      [n, z, a](Complex t) {
        return ipow(t, n - 1) * std::exp((a - 1.0) * t) / (z - std::exp(-t));
      },
      phi, decay};
  const EvalResult pv = pv_integrate_ray(f, PoleSpec{pole, 1}, tol * fact);

  const Complex z_pow = std::exp(-a * branch.log_z);
  const Complex trig =
      kPi * z_pow *
      leibniz(n, pole, cot_pi(a), [&](int j) { return cot_pi_derivative(j, a); });

  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  EvalResult out;
  out.value = sign / fact * (pv.value + trig);
  out.err_estimate = pv.err_estimate / fact + 8.0 * kEps * std::abs(trig) / fact;
  out.method = Method::PrincipalValue;
  out.work = pv.work;
  out.converged = pv.converged;
  return out;
}

EvalResult phi_inverse(const LerchQuery& q, double tol) {
  check_order(q.n);
  const Complex w = q.z;
  const Complex b = q.a;
  const double r = std::abs(w);
  if (r < 1.0 - kUnitBand) {
    throw LerchError(ErrorKind::Domain, "inverse expansion needs |w| > 1");
  }
  if (positive_real(w)) {
    throw LerchError(ErrorKind::Domain,
                     "inverse expansion undefined for w on the positive real "
                     "axis (sgn(phi) = 0)");
  }
  check_shift_pole(b);
  if (distance_to_positive_integer(b) < kIntegerShiftTol) {
    throw LerchError(ErrorKind::NearIntegerShift,
                     "inverse expansion is singular at positive integer b; "
                     "use the integer-a route");
  }

  const int n = q.n;
  const Complex log_w = std::log(w);
  const double sgn = log_w.imag() >= 0.0 ? 1.0 : -1.0;
  const Complex trig =
      kPi / factorial(n - 1) * std::exp(-b * log_w) *
      leibniz(n, log_w, sgn * kI - cot_pi(-b),
              [&](int j) { return -cot_pi_derivative(j, -b); });

  // sum_{m >= 1} x^m / (b - m)^n with x = 1/w.
  const Complex x = 1.0 / w;
  const double rx = std::abs(x);
  const bool unit = r < 1.0 + kUnitBand;
  detail::CompensatedSum sum;
  Complex power = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  std::int64_t m = 1;
  for (; m <= kMaxSeriesTerms; ++m) {
    power *= x;
    sum.add(power / ipow(b - static_cast<double>(m), n));
    if (unit) {
      if (m < kUnitCircleTerms) continue;
      // Remainder past M terms on |x| ~ 1: Abel summation for n = 1,
      // integral comparison for n >= 2.
      const double base = static_cast<double>(m) - b.real();
      const double growth = std::pow(std::max(1.0, rx), static_cast<double>(m));
      tail = (n == 1) ? growth * 4.0 / (std::abs(1.0 - x) * base)
                      : growth / ((n - 1) * std::pow(base, n - 1));
      break;
    }
    const double base = static_cast<double>(m) + 1.0 - b.real();
    if (base <= 1.0) continue;
    tail = std::pow(rx, static_cast<double>(m + 1)) /
           ((1.0 - rx) * std::pow(base, n));
    if (tail <= 0.5 * tol * std::max(1.0, std::abs(trig - sum.value()))) break;
  }

  EvalResult out;
  out.value = trig - sum.value();
  out.err_estimate = tail + 8.0 * kEps * (std::abs(trig) + sum.magnitude());
  out.method = Method::Inverse;
  out.work = m;
  out.converged = within(out.err_estimate, tol, out.value);
  return out;
}

EvalResult phi_integer_a(Complex w, int n, int N, double tol) {
  check_order(n);
  if (N < 1) {
    throw LerchError(ErrorKind::Domain, "integer-a route needs N >= 1");
  }
  if (std::abs(w) < 1.0 - kUnitBand) {
    throw LerchError(ErrorKind::Domain, "integer-a route needs |w| > 1");
  }
  if (positive_real(w)) {
    throw LerchError(ErrorKind::Domain,
                     "integer-a route undefined for w on the positive real "
                     "axis (sgn(phi) = 0)");
  }
  const Complex log_w = std::log(w);
  const double sgn = log_w.imag() >= 0.0 ? 1.0 : -1.0;
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;

  const Complex finite = integer_shift_finite_part(log_w, n);
  const Complex branch = sgn * kI * kPi * ipow(log_w, n - 1) / factorial(n - 1);
  const Complex li = polylog(n, 1.0 / w, 0.1 * tol);
  Complex value = std::exp(-static_cast<double>(N) * log_w) *
                  (finite + branch - parity * li);
  for (int k = 1; k < N; ++k) {
    value -= std::exp(-static_cast<double>(N - k) * log_w) /
             std::pow(static_cast<double>(k), n);
  }

  EvalResult out;
  out.value = value;
  out.err_estimate =
      0.1 * tol + 16.0 * kEps * (std::abs(finite) + std::abs(branch) + std::abs(li)) *
                      std::exp(-N * log_w.real());
  out.method = Method::IntegerShift;
  out.work = n;
  return out;
}

Complex phi_integer_a_explicit(Complex w, int n, int N, double tol) {
  if (n < 1 || n > 5) {
    throw LerchError(ErrorKind::Domain, "closed forms exist for n = 1..5 only");
  }
  if (N < 1 || positive_real(w) || std::abs(w) < 1.0 - kUnitBand) {
    throw LerchError(ErrorKind::Domain, "closed forms need N >= 1, |w| > 1, "
                                        "w off the positive real axis");
  }
  const Complex L = std::log(w);
  const Complex s = (L.imag() >= 0.0 ? 1.0 : -1.0) * kI * kPi;
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  Complex head;
  switch (n) {
    case 1: head = s - L; break;
    case 2: head = pi2 / 3.0 + s * L - L * L / 2.0; break;
    case 3: head = pi2 / 3.0 * L + s / 2.0 * L * L - L * L * L / 6.0; break;
    case 4:
      head = pi4 / 45.0 + pi2 / 6.0 * L * L + s / 6.0 * ipow(L, 3) -
             ipow(L, 4) / 24.0;
      break;
    default:
      head = pi4 / 45.0 * L + pi2 / 18.0 * ipow(L, 3) + s / 24.0 * ipow(L, 4) -
             ipow(L, 5) / 120.0;
      break;
  }
  Complex k_sum{};
  for (int k = 1; k < N; ++k) k_sum += ipow(w, k) / std::pow(k, n);
  const double li_sign = (n % 2 == 1) ? 1.0 : -1.0;
  return std::pow(w, -N) * (head - k_sum + li_sign * polylog(n, 1.0 / w, tol));
}

SymmetryRelation symmetry_transform(const LerchQuery& q) {
  check_order(q.n);
  if (std::abs(q.z) == 0.0) {
    throw LerchError(ErrorKind::Domain, "symmetry relation needs z != 0");
  }
  const int sgn = symmetry_sign(q.z);
  if (sgn == 0) {
    throw LerchError(ErrorKind::Domain,
                     "symmetry relation undefined for z on the positive real "
                     "axis (sgn(phi) = 0)");
  }
  if (distance_to_integer(q.a) < kIntegerShiftTol) {
    throw LerchError(ErrorKind::PoleAtInteger,
                     "symmetry relation needs a non-integer shift");
  }
  const Complex log_z = std::log(q.z);
  const Complex sum = leibniz(q.n, -log_z, cot_pi(q.a) - static_cast<double>(sgn) * kI,
                              [&](int j) { return cot_pi_derivative(j, q.a); });
  const double sign = (q.n % 2 == 1) ? 1.0 : -1.0;
  SymmetryRelation out;
  out.partner = {1.0 / q.z, q.n, 1.0 - q.a};
  out.trig_term = kPi * sign / factorial(q.n - 1) * std::exp(-q.a * log_z) * sum;
  out.sgn_phi = sgn;
  return out;
}

EvalResult extended_polylog(Complex z, int n, Complex a, double tol) {
  check_order(n);
  if (z == Complex{}) {
    EvalResult out;
    out.method = Method::Series;
    return out;
  }
  EvalResult out = phi({z, n, a}, tol / std::max(1.0, std::abs(z)));
  out.value *= z;
  out.err_estimate *= std::abs(z);
  return out;
}

EvalResult phi(const LerchQuery& q, double tol) {
  check_order(q.n);
  check_shift_pole(q.a);
  const BranchData branch = classify(q.z);
  const double r = std::abs(q.z);

  if (branch.region == Region::One) {
    if (q.n == 1) {
      throw LerchError(ErrorKind::Domain,
                       "singular stratum z=1, n=1: Phi(1,1,a) diverges");
    }
    EvalResult out = hurwitz_zeta_eval(q.n, q.a, tol);
    out.method = Method::Hurwitz;
    return out;
  }
  if (branch.region == Region::ExteriorRealLine) {
    throw LerchError(ErrorKind::Domain,
                     "z in (1, inf) lies on the branch cut of Phi");
  }
  if (r <= 1.0 - kUnitBand) return phi_series(q, tol);
  if (positive_real(q.z)) {
    // Just inside z = 1 on the real axis: no expansion in 1/z exists.
    return q.a.real() > 0.0 ? phi_integral(q, tol) : phi_series(q, tol);
  }
  if (distance_to_positive_integer(q.a) < kIntegerShiftTol) {
    return phi_integer_a(q.z, q.n, static_cast<int>(std::round(q.a.real())), tol);
  }
  if (branch.on_negative_axis && r >= 1.0 + kUnitBand && q.a.real() > 0.0) {
    return phi_integral(q, tol);
  }
  return phi_inverse(q, tol);
}

EvalResult evaluate(const LerchQuery& q, Method method, double tol) {
  switch (method) {
    case Method::Auto: return phi(q, tol);
    case Method::Series: return phi_series(q, tol);
    case Method::Integral: return phi_integral(q, tol);
    case Method::PrincipalValue: return phi_pv(q, tol);
    case Method::Inverse: return phi_inverse(q, tol);
    case Method::IntegerShift: {
      check_order(q.n);
      if (distance_to_positive_integer(q.a) >= kIntegerShiftTol) {
        throw LerchError(ErrorKind::Domain,
                         "integer-a route needs a positive integer shift");
      }
      return phi_integer_a(q.z, q.n, static_cast<int>(std::round(q.a.real())),
                           tol);
    }
    case Method::Hurwitz: {
      check_order(q.n);
      if (classify(q.z).region != Region::One || q.n < 2) {
        throw LerchError(ErrorKind::Domain,
                         "Hurwitz route needs z = 1 and n >= 2");
      }
      EvalResult out = hurwitz_zeta_eval(q.n, q.a, tol);
      out.method = Method::Hurwitz;
      return out;
    }
    case Method::Quadrature: break;
  }
  throw LerchError(ErrorKind::Domain, "no evaluation route named " +
                                          std::string(to_string(method)));
}

}  // namespace lerch
