#include "lerch/series_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lerch/special_functions.hpp"

namespace lerch {

TruncatedLaurentSeries::TruncatedLaurentSeries(int min_degree,
                                               std::vector<Complex> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedLaurentSeries: empty window");
  }
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(Complex c, int degree,
                                                        int order) {
  if (order < degree) {
    throw std::invalid_argument("monomial: order below degree");
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(order - degree + 1));
  coeffs[0] = c;
  return {degree, std::move(coeffs)};
}

Complex TruncatedLaurentSeries::coeff(int degree) const {
  if (degree < min_degree_) return {};
  if (degree > order()) {
    throw std::out_of_range("coefficient of eps^" + std::to_string(degree) +
                            " lies beyond the reliable order " +
                            std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

Complex TruncatedLaurentSeries::evaluate(Complex eps) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * eps + *it;
  }
  return acc * std::pow(eps, min_degree_);
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(int new_order) const {
  if (new_order < min_degree_) {
    throw std::invalid_argument("truncated: order below min_degree");
  }
  const int keep = std::min(new_order, order()) - min_degree_ + 1;
  return {min_degree_,
          std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + keep)};
}

namespace {

template <class Op>
TruncatedLaurentSeries combine(const TruncatedLaurentSeries& a,
                               const TruncatedLaurentSeries& b, Op op) {
  const int lo = std::min(a.min_degree(), b.min_degree());
  const int hi = std::min(a.order(), b.order());
  if (hi < lo) {
    throw std::invalid_argument("series sum has an empty reliable window");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int d = lo; d <= hi; ++d) coeffs.push_back(op(a.coeff(d), b.coeff(d)));
  return {lo, std::move(coeffs)};
}

}  // namespace

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a,
                                 const TruncatedLaurentSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a,
                                 const TruncatedLaurentSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

TruncatedLaurentSeries operator*(Complex scale,
                                 const TruncatedLaurentSeries& s) {
  std::vector<Complex> coeffs(s.coeffs().begin(), s.coeffs().end());
  for (auto& c : coeffs) c *= scale;
  return {s.min_degree(), std::move(coeffs)};
}

TruncatedLaurentSeries exp_series(Complex c, int order) {
  if (order < 0) throw std::invalid_argument("exp_series: order < 0");
  std::vector<Complex> coeffs(static_cast<std::size_t>(order + 1));
  coeffs[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    coeffs[static_cast<std::size_t>(k)] =
        coeffs[static_cast<std::size_t>(k - 1)] * c / static_cast<double>(k);
  }
  return {0, std::move(coeffs)};
}

TruncatedLaurentSeries cot_pi_laurent(int order) {
  if (order < -1) throw std::invalid_argument("cot_pi_laurent: order < -1");
  std::vector<Complex> coeffs(static_cast<std::size_t>(order + 2));
  coeffs[0] = 1.0 / kPi;
  for (int k = 1; 2 * k - 1 <= order; ++k) {
    // Exact rational part first, pi^{2k-1} applied last.
    Rational r = abs(bernoulli(2 * k));
    r *= Rational(boost::multiprecision::cpp_int(1) << (2 * k));
    for (int i = 2; i <= 2 * k; ++i) r /= i;
    coeffs[static_cast<std::size_t>(2 * k)] =
        -to_double(r) * std::pow(kPi, 2 * k - 1);
  }
  return {-1, std::move(coeffs)};
}

TruncatedLaurentSeries mul(const TruncatedLaurentSeries& a,
                           const TruncatedLaurentSeries& b) {
  const int lo = a.min_degree() + b.min_degree();
  const int hi = std::min(a.order() + b.min_degree(), b.order() + a.min_degree());
  std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo + 1));
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size() && i + j < coeffs.size(); ++j) {
      coeffs[i + j] += ac[i] * bc[j];
    }
  }
  return {lo, std::move(coeffs)};
}

TruncatedLaurentSeries differentiate(const TruncatedLaurentSeries& s, int j) {
  if (j < 0) throw std::invalid_argument("differentiate: j < 0");
  std::vector<Complex> coeffs(s.coeffs().begin(), s.coeffs().end());
  int lo = s.min_degree();
  for (int step = 0; step < j; ++step) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      coeffs[k] *= static_cast<double>(lo + static_cast<int>(k));
    }
    --lo;
  }
  return {lo, std::move(coeffs)};
}

Complex finite_part_limit(const TruncatedLaurentSeries& s) {
  if (s.min_degree() > 0 || s.order() < 0) {
    throw std::invalid_argument(
        "finite_part_limit: window must contain degree 0");
  }
  double largest = 0.0;
  for (Complex c : s.coeffs()) largest = std::max(largest, std::abs(c));
  for (int d = s.min_degree(); d < 0; ++d) {
    if (std::abs(s.coeff(d)) > kPoleCancellationTol * largest) {
      throw LerchError(ErrorKind::ResidualPole,
                       "coefficient of eps^" + std::to_string(d) +
                           " did not cancel");
    }
  }
  return s.coeff(0);
}

}  // namespace lerch
