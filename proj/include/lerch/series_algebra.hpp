#pragma once

#include <span>
#include <vector>

#include "lerch/types.hpp"

namespace lerch {

/// Laurent series in a small variable eps, known only on the window of
/// degrees [min_degree, order]. Coefficients outside the window are unknown,
/// not zero; arithmetic shrinks the window instead of guessing.
class TruncatedLaurentSeries {
 public:
  TruncatedLaurentSeries(int min_degree, std::vector<Complex> coeffs);

  /// c * eps^degree, known up to `order`.
  static TruncatedLaurentSeries monomial(Complex c, int degree, int order);

  int min_degree() const noexcept { return min_degree_; }
  int order() const noexcept {
    return min_degree_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of eps^degree. Zero below min_degree; throws
  /// std::out_of_range above order.
  Complex coeff(int degree) const;

  /// Pointwise value of the retained window.
  Complex evaluate(Complex eps) const;

  TruncatedLaurentSeries truncated(int order) const;

 private:
  int min_degree_;
  std::vector<Complex> coeffs_;
};

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a,
                                 const TruncatedLaurentSeries& b);
TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a,
                                 const TruncatedLaurentSeries& b);
TruncatedLaurentSeries operator*(Complex scale, const TruncatedLaurentSeries& s);

/// exp(c * eps) = sum_k c^k eps^k / k!, degrees 0..order.
TruncatedLaurentSeries exp_series(Complex c, int order);

/// cot(pi * eps) = 1/(pi eps) - sum_k 2^{2k} |B_{2k}| pi^{2k-1} eps^{2k-1} / (2k)!
TruncatedLaurentSeries cot_pi_laurent(int order);

/// Cauchy product, reliable up to
/// min(a.order + b.min_degree, b.order + a.min_degree).
TruncatedLaurentSeries mul(const TruncatedLaurentSeries& a,
                           const TruncatedLaurentSeries& b);
inline TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a,
                                        const TruncatedLaurentSeries& b) {
  return mul(a, b);
}

/// j-th derivative in eps; both ends of the window move down by j.
TruncatedLaurentSeries differentiate(const TruncatedLaurentSeries& s, int j);

/// Relative size below which a negative-degree coefficient counts as
/// cancelled.
inline constexpr double kPoleCancellationTol = 1e-12;

/// The eps^0 coefficient, after checking that every negative-degree
/// coefficient has cancelled. Throws ResidualPole otherwise.
Complex finite_part_limit(const TruncatedLaurentSeries& s);

}  // namespace lerch
