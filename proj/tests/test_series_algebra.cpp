#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lerch/series_algebra.hpp"
#include "lerch/special_functions.hpp"

using namespace lerch;

namespace {

bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

}  // namespace

TEST_CASE("monomial and coefficient window") {
  const auto m = TruncatedLaurentSeries::monomial(3.0, -2, 1);
  CHECK(m.min_degree() == -2);
  CHECK(m.order() == 1);
  CHECK(m.coeff(-2) == Complex(3.0));
  CHECK(m.coeff(0) == Complex(0.0));
  CHECK(m.coeff(-5) == Complex(0.0));  // below the window: exactly zero
  CHECK_THROWS_AS(m.coeff(2), std::out_of_range);
  CHECK_THROWS_AS(TruncatedLaurentSeries::monomial(1.0, 2, 1), std::invalid_argument);
}

TEST_CASE("exp_series matches c^k / k!") {
  const Complex c{0.3, -1.2};
  const auto e = exp_series(c, 8);
  double fact = 1.0;
  Complex power = 1.0;
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) {
      fact *= k;
      power *= c;
    }
    CHECK(close(e.coeff(k), power / fact, 1e-15));
  }
  // Pointwise: the window sums to exp(c eps) up to eps^9.
  const Complex eps = 1e-2;
  CHECK(close(e.evaluate(eps), std::exp(c * eps), 1e-16));
}

TEST_CASE("cot_pi_laurent reproduces cot(pi eps)") {
  const auto s = cot_pi_laurent(15);
  CHECK(s.min_degree() == -1);
  CHECK(s.order() == 15);
  CHECK(close(s.coeff(-1), 1.0 / kPi, 1e-16));
  CHECK(close(s.coeff(0), 0.0, 0.0));
  CHECK(close(s.coeff(1), -kPi / 3.0, 1e-15));
  CHECK(close(s.coeff(3), -std::pow(kPi, 3) / 45.0, 1e-14));
  CHECK(close(s.coeff(5), -2.0 * std::pow(kPi, 5) / 945.0, 1e-13));
  // Oracle: 1 / tan from the C library.
  for (double eps : {0.01, 0.05, 0.1}) {
    CHECK(close(s.evaluate(eps), 1.0 / std::tan(kPi * eps), 1e-12));
  }
}

TEST_CASE("mul shrinks the reliable window") {
  const auto a = TruncatedLaurentSeries::monomial(2.0, -1, 3);
  const auto b = exp_series(1.0, 4);
  const auto p = mul(a, b);
  CHECK(p.min_degree() == -1);
  CHECK(p.order() == 3);  // min(3 + 0, 4 - 1)
  CHECK(close(p.coeff(-1), 2.0, 0));
  CHECK(close(p.coeff(0), 2.0, 1e-15));
  CHECK(close(p.coeff(2), 2.0 / 6.0, 1e-15));

  // eps^{-1} * eps = 1 exactly.
  const auto one = TruncatedLaurentSeries::monomial(1.0, -1, 2) *
                   TruncatedLaurentSeries::monomial(1.0, 1, 4);
  CHECK(one.min_degree() == 0);
  CHECK(close(one.coeff(0), 1.0, 0));
}

TEST_CASE("sum and difference use the common window") {
  const auto a = TruncatedLaurentSeries::monomial(1.0, -2, 5);
  const auto b = exp_series(2.0, 3);
  const auto s = a + b;
  CHECK(s.min_degree() == -2);
  CHECK(s.order() == 3);
  CHECK(close(s.coeff(-2), 1.0, 0));
  CHECK(close(s.coeff(1), 2.0, 0));
  const auto d = s - b;
  CHECK(close(d.coeff(0), 0.0, 0));
  CHECK(close((Complex(0, 2) * d).coeff(-2), Complex(0, 2), 0));
}

TEST_CASE("differentiate moves the window down") {
  // d/deps eps^{-1} = -eps^{-2}; d^2/deps^2 eps^3 = 6 eps.
  const auto inv = TruncatedLaurentSeries::monomial(1.0, -1, 2);
  const auto d1 = differentiate(inv, 1);
  CHECK(d1.min_degree() == -2);
  CHECK(d1.order() == 1);
  CHECK(close(d1.coeff(-2), -1.0, 0));
  const auto cube = TruncatedLaurentSeries::monomial(1.0, 3, 5);
  const auto d2 = differentiate(cube, 2);
  CHECK(close(d2.coeff(1), 6.0, 0));
  CHECK(differentiate(cube, 0).coeff(3) == Complex(1.0));

  // Termwise derivative of exp agrees with c exp.
  const Complex c{0.5, 0.25};
  const auto e = exp_series(c, 10);
  const auto de = differentiate(e, 1);
  for (int k = 0; k < 9; ++k) CHECK(close(de.coeff(k), c * e.coeff(k), 1e-15));
}

TEST_CASE("finite_part_limit") {
  SUBCASE("returns the constant term once the poles cancel") {
    // (1/eps + 2 + eps) - 1/eps
    TruncatedLaurentSeries s(-1, {1.0, 2.0, 1.0});
    const auto cancelled = s - TruncatedLaurentSeries::monomial(1.0, -1, 1);
    CHECK(close(finite_part_limit(cancelled), 2.0, 0));
  }
  SUBCASE("a surviving pole is reported") {
    TruncatedLaurentSeries s(-1, {1e-3, 2.0});
    CHECK_THROWS_AS(finite_part_limit(s), LerchError);
    try {
      finite_part_limit(s);
    } catch (const LerchError& e) {
      CHECK(e.kind() == ErrorKind::ResidualPole);
    }
  }
  SUBCASE("the window must reach degree 0") {
    CHECK_THROWS_AS(finite_part_limit(TruncatedLaurentSeries(-3, {1.0, 0.0})),
                    std::invalid_argument);
  }
}

TEST_CASE("integer-shift finite part, n = 2, has the closed form pi^2/3 - L^2/2") {
  // lim { -pi d/deps (w^eps cot(pi eps)) - 1/eps^2 } computed by hand:
  // w^eps cot(pi eps) = 1/(pi eps) + L/pi + (L^2/(2 pi) - pi/3) eps + ...
  const Complex L{0.7, 2.1};
  const auto prod = cot_pi_laurent(1) * exp_series(L, 2);
  const auto d = Complex(-kPi) * differentiate(prod, 1);
  const auto fp =
      finite_part_limit(d - TruncatedLaurentSeries::monomial(1.0, -2, d.order()));
  CHECK(close(fp, kPi * kPi / 3.0 - L * L / 2.0, 1e-13));
}
