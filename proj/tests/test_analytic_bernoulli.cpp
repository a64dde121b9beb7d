#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fbridge/analytic_bernoulli.hpp"
#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"

using namespace fbridge;
using std::numbers::pi;

TEST_CASE("hurwitz route values") {
  CHECK(analytic_bernoulli(1.0, 0.7).value.real() == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(analytic_bernoulli(0.0, 0.4).value == Complex(1.0, 0.0));
  CHECK(analytic_bernoulli(1e-7, 0.4).value == Complex(1.0, 0.0));
  // just outside the limit branch the value is already close to 1
  CHECK(std::abs(analytic_bernoulli(1e-5, 0.4).value - 1.0) < 1e-4);
  CHECK(analytic_bernoulli(2.0, 1.0).value.real() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK_THROWS_AS(analytic_bernoulli(2.0, 0.0), DomainError);
}

TEST_CASE("integer orders coincide with the polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(unit(rng));
  for (int n = 1; n <= 10; ++n) {
    const RationalPolynomial p = bernoulli_polynomial(n);
    for (double x : xs) {
      const Complex v = analytic_bernoulli(static_cast<double>(n), x).value;
      CHECK(std::abs(v.real() - p.evaluate(x)) < 1e-10);
      CHECK(std::abs(v.imag()) < 1e-12);
    }
  }
}

TEST_CASE("difference identity") {
  for (double s : {1.5, 2.5, 3.0}) {
    for (double x : {0.5, 1.0}) {
      const Complex d = analytic_bernoulli(s, x + 1.0).value - analytic_bernoulli(s, x).value;
      CHECK(std::abs(d - s * std::pow(x, s - 1.0)) < 1e-9);
    }
  }
}

TEST_CASE("fourier route") {
  const double b2 = 0.25 * 0.25 - 0.25 + 1.0 / 6.0;
  const AnalyticBernoulliValue f = fourier_bernoulli(2.0, 0.25, 10000);
  REQUIRE(f.tail_bound.has_value());
  CHECK(std::abs(f.value.real() - b2) < 1e-6);
  CHECK(std::abs(f.value.real() - analytic_bernoulli(2.0, 0.25).value.real()) <= *f.tail_bound);
  CHECK(fourier_bernoulli(2.0, 0.3, 5000).value.real() ==
        doctest::Approx(fourier_bernoulli(2.0, 0.7, 5000).value.real()).epsilon(1e-12));
  CHECK(std::abs(fourier_bernoulli(3.0, 0.5, 1000).value.real()) < 1e-12);
  for (double s : {1.5, 2.5}) {
    const AnalyticBernoulliValue g = fourier_bernoulli(s, 0.4, 2000);
    CHECK(std::abs(g.value.real() - analytic_bernoulli(s, 0.4).value.real()) <= *g.tail_bound);
  }
}

TEST_CASE("displayed normalization is a fixed multiple") {
  const double s = 2.0;
  const double standard = fourier_bernoulli(s, 0.25, 1000).value.real();
  const double displayed = fourier_bernoulli(s, 0.25, 1000, FourierNormalization::displayed).value.real();
  CHECK(displayed == doctest::Approx(-std::pow(2.0 * pi, -s) * standard).epsilon(1e-14));
}

TEST_CASE("fourier route domain") {
  CHECK_THROWS_AS(fourier_bernoulli(1.0, 0.3, 100), DivergenceError);
  CHECK_THROWS_AS(fourier_bernoulli(2.0, 0.3, 9), DomainError);
  CHECK_THROWS_AS(fourier_bernoulli(2.0, 1.0, 100), DomainError);
}
