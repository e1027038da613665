#include "lerch/special_functions.hpp"

#include "compensated_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lerch {

namespace {

constexpr int kBernoulliTable = 120;
constexpr int kCotPolynomialTable = 40;

std::vector<Rational> bernoulli_upto(int kmax) {
  // Akiyama-Tanigawa: row m starts at 1/(m+1); the leading entry after
  // folding is B_m with the B_1 = +1/2 convention.
  std::vector<Rational> row(static_cast<std::size_t>(kmax + 1));
  std::vector<Rational> out(static_cast<std::size_t>(kmax + 1));
  for (int m = 0; m <= kmax; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& lo = row[static_cast<std::size_t>(j - 1)];
      lo = j * (lo - row[static_cast<std::size_t>(j)]);
    }
    out[static_cast<std::size_t>(m)] = row[0];
  }
  if (kmax >= 1) out[1] = -out[1];
  return out;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = bernoulli_upto(kBernoulliTable);
  return table;
}

const std::vector<CotDerivPolynomial>& cot_polynomial_table() {
  static const std::vector<CotDerivPolynomial> table = [] {
    std::vector<CotDerivPolynomial> t;
    t.reserve(kCotPolynomialTable + 1);
    t.push_back(CotDerivPolynomial::base());
    for (int j = 1; j <= kCotPolynomialTable; ++j) t.push_back(t.back().next());
    return t;
  }();
  return table;
}

using detail::CompensatedSum;

Complex riemann_zeta_int(int s, double tol) {
  // Integer arguments only; s = 1 is excluded by the caller.
  if (s >= 2) return hurwitz_zeta(s, 1.0, tol);
  if (s == 0) return -0.5;
  const int m = -s;
  if (m % 2 == 0) return 0.0;
  return -to_double(bernoulli(m + 1)) / (m + 1);
}

Complex polylog_near_one(int n, Complex x, double tol, std::int64_t& terms) {
  // Li_n(e^mu) = mu^{n-1}/(n-1)! (H_{n-1} - log(-mu))
  //            + sum_{k >= 0, k != n-1} zeta(n-k) mu^k / k!,   |mu| < 2 pi.
  const Complex mu = std::log(x);
  double harmonic = 0.0;
  for (int k = 1; k < n; ++k) harmonic += 1.0 / k;
  Complex sum{};
  if (std::abs(mu) > 0.0) {
    sum = ipow(mu, n - 1) / factorial(n - 1) * (harmonic - std::log(-mu));
  }
  Complex power = 1.0;  // mu^k / k!
  int quiet = 0;
  for (int k = 0; k <= kBernoulliTable - n; ++k) {
    if (k > 0) power *= mu / static_cast<double>(k);
    if (k == n - 1) continue;
    const Complex term = riemann_zeta_int(n - k, 1e-16) * power;
    sum += term;
    ++terms;
    // zeta(n-k) vanishes at every other negative even argument, so a single
    // small term is not a stopping signal.
    quiet = std::abs(term) <= tol * std::max(1.0, std::abs(sum)) ? quiet + 1 : 0;
    if (k > n + 2 && quiet >= 3) break;
  }
  return sum;
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: k < 0");
  if (k <= kBernoulliTable) return bernoulli_table()[static_cast<std::size_t>(k)];
  if (k % 2 == 1) return Rational(0);
  return bernoulli_upto(k)[static_cast<std::size_t>(k)];
}

Rational tan_series_coeff(int n) {
  if (n < 1) throw std::invalid_argument("tan_series_coeff: n < 1");
  using boost::multiprecision::cpp_int;
  const cpp_int four_n = cpp_int(1) << (2 * n);
  Rational r = abs(bernoulli(2 * n)) * Rational(four_n) * Rational(four_n - 1);
  for (int i = 2; i <= 2 * n; ++i) r /= i;
  return r;
}

CotDerivPolynomial CotDerivPolynomial::base() {
  return {0, {Rational(0), Rational(1)}};
}

CotDerivPolynomial CotDerivPolynomial::next() const {
  // -(1 + c^2) Q'(c): c^k contributes -k c^{k-1} - k c^{k+1}.
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const Rational d = coeffs_[k] * static_cast<long>(k);
    out[k - 1] -= d;
    out[k + 1] -= d;
  }
  return {order_ + 1, std::move(out)};
}

Complex CotDerivPolynomial::evaluate(Complex c) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * c + to_double(*it);
  }
  return acc;
}

const CotDerivPolynomial& cot_derivative_polynomial(int j) {
  if (j < 0) throw std::invalid_argument("cot_derivative_polynomial: j < 0");
  if (j <= kCotPolynomialTable) {
    return cot_polynomial_table()[static_cast<std::size_t>(j)];
  }
  thread_local std::vector<CotDerivPolynomial> extra;
  const auto& table = cot_polynomial_table();
  if (extra.empty()) extra.push_back(table.back().next());
  while (extra.back().derivative_order() < j) extra.push_back(extra.back().next());
  return extra[static_cast<std::size_t>(j - kCotPolynomialTable - 1)];
}

Complex cot_pi(Complex a) {
  const Complex reduced = a - std::round(a.real());
  if (std::abs(reduced) < kCotPoleTol) {
    throw LerchError(ErrorKind::PoleAtInteger,
                     "cot(pi a) has a pole at integer a = " +
                         std::to_string(std::round(a.real())));
  }
  const Complex x = kPi * reduced;
  if (std::abs(x.imag()) < 1.0) return std::cos(x) / std::sin(x);
  // Far from the real axis sin and cos overflow; the exponential form with
  // the decaying factor stays finite.
  if (x.imag() > 0.0) {
    const Complex e = std::exp(2.0 * kI * x);
    return kI * (e + 1.0) / (e - 1.0);
  }
  const Complex e = std::exp(-2.0 * kI * x);
  return kI * (1.0 + e) / (1.0 - e);
}

Complex cot_pi_derivative(int j, Complex a) {
  if (j < 0) throw std::invalid_argument("cot_pi_derivative: j < 0");
  const Complex c = cot_pi(a);
  return std::pow(kPi, j) * cot_derivative_polynomial(j).evaluate(c);
}

Complex polylog(int n, Complex x, double tol) {
  if (n < 1) throw std::invalid_argument("polylog: n < 1");
  const double r = std::abs(x);
  if (r > 1.0 + 1e-15) {
    throw LerchError(ErrorKind::Domain, "polylog: |x| > 1");
  }
  if (n == 1) {
    if (std::abs(x - 1.0) == 0.0) {
      throw LerchError(ErrorKind::DivergentAtOne, "Li_1 diverges at x = 1");
    }
    return -std::log(1.0 - x);
  }
  if (x == Complex(1.0, 0.0)) return hurwitz_zeta(n, 1.0, tol);
  if (r == 0.0) return 0.0;
  std::int64_t terms = 0;
  if (r > 0.75) return polylog_near_one(n, x, tol, terms);

  CompensatedSum sum;
  Complex power = 1.0;
  for (int k = 1;; ++k) {
    power *= x;
    sum.add(power / std::pow(static_cast<double>(k), n));
    // Remaining terms are bounded by r^{k+1} / ((1 - r) (k+1)^n).
    const double tail =
        std::pow(r, k + 1) / ((1.0 - r) * std::pow(k + 1.0, n));
    if (tail <= tol * std::max(1.0, std::abs(sum.value()))) break;
  }
  return sum.value();
}

EvalResult hurwitz_zeta_eval(int n, Complex a, double tol) {
  if (n < 2) throw std::invalid_argument("hurwitz_zeta: n < 2");
  const double to_pole = [&] {
    if (a.real() > 0.5) return std::numeric_limits<double>::infinity();
    return std::abs(a - std::round(a.real()));
  }();
  if (to_pole < kCotPoleTol) {
    throw LerchError(ErrorKind::PoleAtNonPositiveInteger,
                     "zeta(n, a) has a pole at non-positive integer a");
  }

  int terms = std::max(20, static_cast<int>(std::ceil(std::abs(a))) + 20);
  EvalResult out;
  out.method = Method::Series;
  for (int attempt = 0; attempt < 8; ++attempt, terms *= 2) {
    CompensatedSum sum;
    for (int m = terms - 1; m >= 0; --m) {
      sum.add(1.0 / ipow(a + static_cast<double>(m), n));
    }
    // Euler-Maclaurin from x = terms: integral + f/2 + four Bernoulli terms.
    const Complex base = a + static_cast<double>(terms);
    const Complex inv = 1.0 / base;
    Complex tail = ipow(inv, n - 1) / static_cast<double>(n - 1) +
                   0.5 * ipow(inv, n);
    double rising = n;  // (n)_{2k-1}
    Complex inv_pow = ipow(inv, n + 1);
    Complex next_term{};
    for (int k = 1; k <= 5; ++k) {
      double fact = 1.0;
      for (int i = 2; i <= 2 * k; ++i) fact *= i;
      const Complex term = to_double(bernoulli(2 * k)) / fact * rising * inv_pow;
      if (k <= 4) {
        tail += term;
      } else {
        next_term = term;
      }
      rising *= (n + 2 * k - 1) * static_cast<double>(n + 2 * k);
      inv_pow *= inv * inv;
    }
    sum.add(tail);
    out.value = sum.value();
    out.work = terms;
    out.err_estimate =
        std::abs(next_term) + 8.0 * std::numeric_limits<double>::epsilon() *
                                  std::abs(out.value);
    if (out.err_estimate <= tol * std::max(1.0, std::abs(out.value))) {
      out.converged = true;
      return out;
    }
  }
  out.converged = false;
  return out;
}

Complex polygamma(int m, Complex a, double tol) {
  if (m < 1) throw std::invalid_argument("polygamma: order m < 1");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  return sign * factorial(m) * hurwitz_zeta(m + 1, a, tol);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Complex ipow(Complex z, int k) {
  Complex result = 1.0;
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

}  // namespace lerch
