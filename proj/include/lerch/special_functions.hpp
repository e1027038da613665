#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lerch/types.hpp"

namespace lerch {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Exact Bernoulli number B_k with B_1 = -1/2. Values up to B_120 are
/// precomputed on first use and shared read-only between threads.
Rational bernoulli(int k);

/// 2^{2n} (2^{2n} - 1) |B_{2n}| / (2n)!, the coefficient of alpha^{2n-1} in
/// the Maclaurin series of tan(alpha).
Rational tan_series_coeff(int n);

/// d^j/da^j cot(pi a) written as pi^j * Q_j(c) with c = cot(pi a).
///
/// Q_0(c) = c and Q_{j+1}(c) = -(1 + c^2) Q_j'(c). Every Q_j has integer
/// coefficients and the parity of j + 1.
class CotDerivPolynomial {
 public:
  static CotDerivPolynomial base();

  int derivative_order() const noexcept { return order_; }
  /// coeffs()[k] multiplies c^k; the pi^j scale is not included.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  CotDerivPolynomial next() const;

  /// Q_j(c), without the pi^j factor.
  Complex evaluate(Complex c) const;

 private:
  CotDerivPolynomial(int order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  int order_;
  std::vector<Rational> coeffs_;
};

/// Cached Q_j for j <= 40, built on first use; computed on demand beyond.
const CotDerivPolynomial& cot_derivative_polynomial(int j);

/// Distance below which an argument counts as sitting on a cot(pi a) pole.
inline constexpr double kCotPoleTol = 1e-12;

/// cot(pi a) for complex a, reduced by the nearest integer to Re a first.
/// Throws PoleAtInteger when a is within kCotPoleTol of an integer.
Complex cot_pi(Complex a);

/// d^j/da^j cot(pi a). Throws PoleAtInteger near integers.
Complex cot_pi_derivative(int j, Complex a);

/// Li_n(x) for n >= 1 and |x| <= 1.
///
/// Direct summation with a geometric tail bound for |x| <= 0.75; closer to
/// the unit circle the expansion in mu = log x around x = 1 is used.
/// Throws Domain for |x| > 1 and DivergentAtOne for n = 1, x = 1.
Complex polylog(int n, Complex x, double tol = 1e-15);

/// zeta(n, a) = sum_{m >= 0} (a + m)^{-n} for n >= 2, by direct summation
/// followed by an Euler-Maclaurin tail with four Bernoulli corrections.
/// Throws PoleAtNonPositiveInteger for a in {0, -1, -2, ...}.
EvalResult hurwitz_zeta_eval(int n, Complex a, double tol = 1e-15);
inline Complex hurwitz_zeta(int n, Complex a, double tol = 1e-15) {
  return hurwitz_zeta_eval(n, a, tol).value;
}

/// psi^{(m)}(a) = (-1)^{m+1} m! zeta(m + 1, a), for m >= 1.
Complex polygamma(int m, Complex a, double tol = 1e-15);

/// Binomial coefficient C(n, k) as a double; exact for the small n used here.
double binomial(int n, int k);
double factorial(int n);

/// z^k by repeated squaring (k >= 0).
Complex ipow(Complex z, int k);

}  // namespace lerch
