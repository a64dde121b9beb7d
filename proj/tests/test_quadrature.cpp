#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"
#include "fbridge/gamma.hpp"
#include "fbridge/quadrature.hpp"

using namespace fbridge;
using std::numbers::pi;

namespace {

// (1/t!) sum_j (-1)^(t-j) C(t,j) j^s, principal powers
Complex stirling_continuation(Complex s, int t) {
  Complex acc = 0.0;
  double binom = 1.0;
  double fact = 1.0;
  for (int j = 1; j <= t; ++j) fact *= j;
  for (int j = 0; j <= t; ++j) {
    if (j > 0) {
      binom = binom * (t - j + 1) / j;
      acc += ((t - j) % 2 ? -1.0 : 1.0) * binom * std::exp(s * std::log(static_cast<double>(j)));
    }
  }
  return acc / fact;
}

}  // namespace

TEST_CASE("gauss-legendre integrates monomials up to degree 2n-1") {
  for (int n = 1; n <= 20; ++n) {
    const QuadratureRule rule = gauss_legendre(n, 0.0, 1.0);
    REQUIRE(rule.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      const double v = rule.integrate([k](double x) { return std::pow(x, k); });
      INFO("n = " << n << ", k = " << k);
      CHECK(std::abs(v - 1.0 / (k + 1)) <= 1e-13 / (k + 1));
    }
  }
}

TEST_CASE("gauss-legendre rule shape") {
  const QuadratureRule rule = gauss_legendre(64, -2.0, 3.0);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    CHECK(rule.weights[i] > 0.0);
    CHECK(rule.nodes[i] > -2.0);
    CHECK(rule.nodes[i] < 3.0);
    if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    total += rule.weights[i];
  }
  CHECK(total == doctest::Approx(5.0).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), DomainError);
}

TEST_CASE("periodic trapezoid") {
  const QuadratureRule rule = periodic_trapezoid(16);
  for (double w : rule.weights) CHECK(w == doctest::Approx(1.0 / 16));
  // mean of cos^2 over the circle
  CHECK(rule.integrate([](double t) { return std::cos(t) * std::cos(t); }) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("contour integral of monomials") {
  const CircularContour c{0.8, 64};
  for (int k = -5; k <= 5; ++k) {
    const Complex v = contour_integral([k](Complex z) { return std::pow(z, k); }, c);
    const double expected = k == -1 ? 1.0 : 0.0;
    INFO("k = " << k);
    CHECK(std::abs(v - expected) < 1e-12);
  }
  CHECK_THROWS_AS(contour_integral([](Complex) { return Complex(NAN, 0.0); }, c), NumericalError);
}

TEST_CASE("contour validation") {
  CHECK_THROWS_AS((CircularContour{2.0 * pi, 64}.validate()), DomainError);
  CHECK_THROWS_AS((CircularContour{1.0, 63}.validate()), DomainError);
  CHECK_THROWS_AS((CircularContour{0.0, 64}.validate()), DomainError);
  CHECK_NOTHROW((CircularContour{6.0, 64}.validate()));
  CHECK_THROWS_AS(analytic_stirling_kernel(3.0, 2, CircularContour{7.0, 64}), DomainError);
}

TEST_CASE("analytic stirling kernel at integers") {
  CHECK(std::abs(analytic_stirling_kernel(3.0, 2).value - 3.0) < 1e-10);
  CHECK(std::abs(analytic_stirling_kernel(4.0, 4).value - 1.0) < 1e-10);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double exact = stirling2(n, k).get_d();
      const Complex v = analytic_stirling_kernel(static_cast<double>(n), k).value;
      INFO("n = " << n << ", k = " << k);
      CHECK(std::abs(v - exact) <= 1e-8 * std::max(1.0, exact));
    }
  }
}

TEST_CASE("analytic stirling kernel off the integers") {
  const Complex a = analytic_stirling_kernel(2.5, 2, CircularContour{1.0, 128}).value;
  const Complex b = analytic_stirling_kernel(2.5, 2, CircularContour{1.0, 256}).value;
  CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
  CHECK(std::abs(b - stirling_continuation(2.5, 2)) < 1e-9);
  for (Complex s : {Complex(3.5, 0.5), Complex(4.25, -1.0), Complex(1.5, 0.0)}) {
    for (int t : {1, 2, 3}) {
      const Complex v = analytic_stirling_kernel(s, t).value;
      const Complex e = stirling_continuation(s, t);
      INFO("s = " << s << ", t = " << t);
      CHECK(std::abs(v - e) <= 1e-9 * std::max(1.0, std::abs(e)));
    }
  }
}

TEST_CASE("contour refinement converges fast") {
  auto at = [](int nodes) { return analytic_stirling_kernel(2.5, 2, CircularContour{1.0, nodes}).value; };
  const double d1 = std::abs(at(16) - at(32));
  const double d2 = std::abs(at(32) - at(64));
  CHECK((d2 <= 1e-3 * d1 || d2 < 1e-13));
}

TEST_CASE("analytic stirling kernel errors") {
  CHECK_THROWS_AS(analytic_stirling_kernel(3.0, -1), UnsupportedParameter);
  CHECK_THROWS_AS(analytic_stirling_kernel(-2.0, 1), DomainError);
}

TEST_CASE("log gamma") {
  CHECK(std::abs(fbridge::gamma(Complex(5.0)) - 24.0) < 1e-12);
  CHECK(std::abs(fbridge::gamma(Complex(0.5)) - std::sqrt(pi)) < 1e-13);
  CHECK(std::abs(fbridge::gamma(Complex(-0.5)) + 2.0 * std::sqrt(pi)) < 1e-12);
  // |Gamma(i)|^2 = pi / sinh(pi)
  CHECK(std::norm(fbridge::gamma(Complex(0.0, 1.0))) == doctest::Approx(pi / std::sinh(pi)).epsilon(1e-13));
  CHECK(log_gamma(Complex(171.0)).real() == doctest::Approx(std::lgamma(171.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(Complex(-3.0)), PoleError);
  CHECK_THROWS_AS(log_gamma(Complex(0.0)), PoleError);
}

TEST_CASE("pairwise sum is order independent on exact data") {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(i % 2 ? 0.5 : 0.25);
  CHECK(pairwise_sum(std::span<const double>(v)) == 375.0);
}
