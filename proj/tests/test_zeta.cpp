#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"
#include "fbridge/fredholm.hpp"
#include "fbridge/zeta.hpp"

using namespace fbridge;
using std::numbers::pi;

namespace {

// Direct sum plus the first three tail terms, N = 2000.
double zeta_direct(double s) {
  const int N = 2000;
  double acc = 0.0;
  for (int n = N; n >= 1; --n) acc += std::pow(n, -s);
  return acc + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) + s / 12.0 * std::pow(N, -s - 1.0);
}

// -sum log n / n^2 with the matching tail
double zeta_prime_2_direct() {
  const int N = 20000;
  double acc = 0.0;
  for (int n = N; n >= 2; --n) acc -= std::log(n) / (static_cast<double>(n) * n);
  const double L = std::log(N);
  return acc - (L + 1.0) / N + 0.5 * L / (static_cast<double>(N) * N);
}

}  // namespace

TEST_CASE("riemann zeta values") {
  CHECK(riemann_zeta(2.0).value.real() == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
  CHECK(riemann_zeta(4.0).value.real() == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-14));
  CHECK(riemann_zeta(-1.0).value.real() == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK(riemann_zeta(0.0).value.real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(riemann_zeta(-3.0).value.real() == doctest::Approx(1.0 / 120.0).epsilon(1e-14));
  CHECK(std::abs(riemann_zeta(-2.0).value) < 1e-15);
  for (double s : {1.5, 3.0, 5.5}) CHECK(riemann_zeta(s).value.real() == doctest::Approx(zeta_direct(s)).epsilon(1e-11));
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
}

TEST_CASE("first nontrivial zero") {
  CHECK(std::abs(riemann_zeta(Complex(0.5, 14.134725141734693)).value) < 1e-9);
}

TEST_CASE("hurwitz zeta identities") {
  CHECK(hurwitz_zeta(2.0, 0.5).value.real() == doctest::Approx(pi * pi / 2.0).epsilon(1e-13));
  for (double x : {0.2, 0.7, 1.3}) {
    CHECK(hurwitz_zeta(0.0, x).value.real() == doctest::Approx(0.5 - x).epsilon(1e-14));
    // zeta(-n, x) = -B_{n+1}(x)/(n+1)
    for (int n = 1; n <= 5; ++n) {
      const double b = bernoulli_polynomial(n + 1).evaluate(x);
      CHECK(hurwitz_zeta(-static_cast<double>(n), x).value.real() == doctest::Approx(-b / (n + 1)).epsilon(1e-12));
    }
    for (double s : {-1.5, 0.5, 2.5}) {
      const Complex d = hurwitz_zeta(s, x).value - hurwitz_zeta(s, x + 1.0).value;
      CHECK(std::abs(d - std::pow(x, -s)) < 1e-11 * std::max(1.0, std::pow(x, -s)));
    }
  }
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST_CASE("zeta derivatives") {
  CHECK(zeta_derivative(0.0) == doctest::Approx(-0.5 * std::log(2.0 * pi)).epsilon(1e-10));
  const double zp2 = zeta_prime_2_direct();
  CHECK(zeta_derivative(2.0) == doctest::Approx(zp2).epsilon(1e-9));
  // log A = (gamma + log 2 pi)/12 - zeta'(2)/(2 pi^2) and zeta'(-1) = 1/12 - log A
  const double logA = (std::numbers::egamma + std::log(2.0 * pi)) / 12.0 - zp2 / (2.0 * pi * pi);
  CHECK(zeta_derivative(-1.0) == doctest::Approx(1.0 / 12.0 - logA).epsilon(1e-9));
  // d/ds zeta(s, 1/2) at 0 is -log(2)/2
  CHECK(hurwitz_zeta_derivative(0.0, 0.5) == doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("zeta regularized laplacian determinants") {
  CHECK(det_zeta_laplacian(BoundaryCondition::DD) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(det_zeta_laplacian(BoundaryCondition::NN) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(det_zeta_laplacian(BoundaryCondition::DN) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(det_zeta_laplacian(BoundaryCondition::ND) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(det_zeta_laplacian(BoundaryCondition::DD) - 2.0 * pi) > 1.0);
}

TEST_CASE("determinant ratios") {
  for (double lambda : {1.0, 4.0, 9.0}) {
    const double r = std::sqrt(lambda);
    CHECK(det_ratio(lambda, BoundaryCondition::DD) == doctest::Approx(std::sin(r) / r).epsilon(1e-15));
    CHECK(det_ratio(lambda, BoundaryCondition::DN) == doctest::Approx(std::cos(r)).epsilon(1e-15));
    CHECK(std::abs(det_ratio(lambda, BoundaryCondition::DN) -
                   fredholm_det(KernelSpec::min_xy(), lambda, 128, Sign::minus).value.real()) < 1e-7);
  }
  CHECK(det_ratio(-4.0, BoundaryCondition::DD) == doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-15));
  CHECK(det_ratio(-4.0, BoundaryCondition::ND) == doctest::Approx(std::cosh(2.0)).epsilon(1e-15));
  // both sides of the series switch
  CHECK(det_ratio(0.0, BoundaryCondition::DD) == 1.0);
  CHECK(det_ratio(0.0, BoundaryCondition::DN) == 1.0);
  for (double lambda : {9.9e-7, 1.01e-6, -9.9e-7, -1.01e-6}) {
    const double r = std::sqrt(std::abs(lambda));
    const double dd = lambda > 0 ? std::sin(r) / r : std::sinh(r) / r;
    const double dn = lambda > 0 ? std::cos(r) : std::cosh(r);
    CHECK(std::abs(det_ratio(lambda, BoundaryCondition::DD) - dd) < 1e-15);
    CHECK(std::abs(det_ratio(lambda, BoundaryCondition::DN) - dn) < 1e-15);
  }
}

TEST_CASE("zeta at even integers from bernoulli numbers") {
  for (int m = 1; m <= 15; ++m) {
    const double z = riemann_zeta(2.0 * m).value.real();
    CHECK(std::abs(zeta_even(m) - z) <= 1e-12 * z);
  }
  CHECK(zeta_even(1) == doctest::Approx(pi * pi / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(zeta_even(0), DomainError);
  CHECK_THROWS_AS(zeta_even(51), DomainError);
}

TEST_CASE("log sinc series") {
  const LogSincSeries s = log_sinc_series(25);
  for (double x : {0.3, 1.0, 2.0}) CHECK(s.evaluate(x) == doctest::Approx(std::log(std::sin(x) / x)).epsilon(1e-10));
  CHECK(s.sinc_taylor[0] == Rational(1));
  CHECK(s.sinc_taylor[1] == Rational(-1, 6));
  CHECK(s.sinc_taylor[2] == Rational(1, 120));
  CHECK(s.bernoulli_claim[1] == Rational(1, 12));
  CHECK(s.first_mismatch == 1);
}

TEST_CASE("glaisher constant") {
  const GlaisherReport g = glaisher_constant();
  const double logA = (std::numbers::egamma + std::log(2.0 * pi)) / 12.0 - zeta_prime_2_direct() / (2.0 * pi * pi);
  CHECK(g.A == doctest::Approx(std::exp(logA)).epsilon(1e-9));
  CHECK(g.displayed_deviation < 1e-9);
  // log(2 pi)/12 is about 0.153, log A about 0.248
  CHECK(g.alternative_formula_residual == doctest::Approx(0.261).epsilon(1e-2));
}
