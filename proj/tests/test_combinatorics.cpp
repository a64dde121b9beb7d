#include <doctest.h>

#include <cmath>
#include <vector>

#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"
#include "fbridge/euler_maclaurin.hpp"
#include "fbridge/rational.hpp"

using namespace fbridge;

namespace {

// Akiyama-Tanigawa; produces B_1 = +1/2, flipped below.
std::vector<mpq_class> akiyama_tanigawa(int n_max) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  out[1] = -out[1];
  return out;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
mpz_class stirling_explicit(int n, int k) {
  mpz_class acc = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), k - j, n);
    acc += (j % 2 ? -1 : 1) * binom(k, j) * p;
  }
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return acc / f;
}

Rational q(long p, long r = 1) { return Rational(p, r); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("7") == q(7));
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 3) * q(3, 4) / q(1, 2) == q(1));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("bernoulli numbers against Akiyama-Tanigawa") {
  const auto oracle = akiyama_tanigawa(60);
  for (int n = 0; n <= 60; ++n) {
    INFO("n = " << n);
    CHECK(bernoulli_number(n).raw() == oracle[n]);
  }
  CHECK(bernoulli_number(0) == q(1));
  CHECK(bernoulli_number(1) == q(-1, 2));
  CHECK(bernoulli_number(3) == q(0));
  CHECK(bernoulli_number(12) == q(-691, 2730));
}

TEST_CASE("bernoulli cap") {
  CHECK_THROWS_AS(bernoulli_number(201), SizeError);
  CombinatoricsLimits wide;
  wide.bernoulli_cap = 210;
  CHECK(bernoulli_number(202, wide).sign() != 0);
}

TEST_CASE("bernoulli polynomials") {
  const RationalPolynomial b1 = bernoulli_polynomial(1);
  CHECK(b1.degree() == 1);
  CHECK(b1.coefficient(0) == q(-1, 2));
  CHECK(b1.coefficient(1) == q(1));
  CHECK(bernoulli_polynomial(2)(q(0)) == q(1, 6));
  const RationalPolynomial b4 = bernoulli_polynomial(4);
  CHECK(b4(q(1)) - b4(q(0)) == q(0));
  // B_n(x+1) - B_n(x) = n x^(n-1)
  const Rational x = q(3, 7);
  for (int n = 1; n <= 14; ++n) {
    const RationalPolynomial p = bernoulli_polynomial(n);
    CHECK(p(x + q(1)) - p(x) == q(n) * x.pow(n - 1));
  }
}

TEST_CASE("norlund polynomials") {
  for (int n = 0; n <= 15; ++n) {
    CHECK(norlund_polynomial(n, q(1)).coefficients() == bernoulli_polynomial(n).coefficients());
  }
  CHECK(norlund_polynomial(0, q(-7, 3), q(5)) == q(1));
  CHECK(norlund_polynomial(4, q(1), q(0)) == q(-1, 30));
  // (t/(e^t-1))^a = 1 - a t/2 + a(3a-1)/24 t^2 + ...
  for (const Rational& a : {q(-2), q(-3), q(1, 2), q(5, 3)}) {
    CHECK(norlund_polynomial(1, a, q(0)) == -a / q(2));
    CHECK(norlund_polynomial(2, a, q(0)) == a * (q(3) * a - q(1)) / q(12));
  }
  CHECK(norlund_polynomial(1, q(-2), q(0)) == q(1));
  // alpha = 2 is the binomial self-convolution of B_k
  for (int n = 0; n <= 12; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += Rational(binom(n, k)) * bernoulli_number(k) * bernoulli_number(n - k);
    CHECK(norlund_polynomial(n, q(2), q(0)) == acc);
  }
}

TEST_CASE("stirling numbers by both routes against the explicit sum") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2_norlund(3, 2) == 3);
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(2, 3) == 0);
  CHECK(stirling2_norlund(2, 3) == 0);
  for (int n = 0; n <= 25; ++n) {
    CHECK(stirling2(n, n) == 1);
    for (int k = 0; k <= n; ++k) {
      INFO("n = " << n << ", k = " << k);
      const mpz_class expected = stirling_explicit(n, k);
      CHECK(stirling2(n, k) == expected);
      CHECK(stirling2_norlund(n, k) == expected);
    }
  }
}

TEST_CASE("exact euler-maclaurin is exact for polynomials") {
  // x^5: all odd derivatives of order >= 7 vanish, so M = 3 is exact
  const RationalPolynomial x5({q(0), q(0), q(0), q(0), q(0), q(1)});
  const ExactEulerMaclaurinResult r = euler_maclaurin_sum(x5, 17, 3);
  Rational direct;
  for (int k = 1; k <= 17; ++k) direct += q(k).pow(5);
  CHECK(r.total == direct);
  CHECK(r.reference_sum == direct);
  Rational recomposed = r.integral_term + r.endpoint_term;
  for (const Rational& c : r.correction_terms) recomposed += c;
  CHECK(recomposed == r.total);
}

TEST_CASE("numeric euler-maclaurin") {
  SmoothFunction square{[](double x) { return x * x; },
                        [](int k, double x) { return k == 1 ? 2.0 * x : (k == 2 ? 2.0 : 0.0); }};
  const EulerMaclaurinResult sq = euler_maclaurin_sum(square, 10, 1);
  CHECK(sq.total == doctest::Approx(385.0).epsilon(1e-14));
  double sum = sq.head_sum + sq.integral_term + sq.endpoint_term;
  for (double c : sq.correction_terms) sum += c;
  CHECK(sum == doctest::Approx(sq.total).epsilon(1e-15));

  SmoothFunction inv{[](double x) { return 1.0 / x; }, [](int k, double x) {
                       double f = (k % 2 == 0) ? 1.0 : -1.0;
                       for (int j = 2; j <= k; ++j) f *= j;
                       return f / std::pow(x, k + 1);
                     }};
  EulerMaclaurinOptions opts;
  opts.base = 20;
  double harmonic = 0.0;
  for (int k = 1000; k >= 1; --k) harmonic += 1.0 / k;
  const EulerMaclaurinResult h = euler_maclaurin_sum(inv, 1000, 3, opts);
  CHECK(std::abs(h.total - harmonic) < 1e-12);
  CHECK(h.derivative_source == DerivativeSource::analytic);

  SmoothFunction no_derivs{[](double x) { return std::exp(-x / 10.0); }, {}};
  const EulerMaclaurinResult e = euler_maclaurin_sum(no_derivs, 30, 2);
  double direct = 0.0;
  for (int k = 1; k <= 30; ++k) direct += std::exp(-k / 10.0);
  CHECK(e.derivative_source == DerivativeSource::central_difference);
  CHECK(std::abs(e.total - direct) < 1e-7);

  CHECK_THROWS_AS(euler_maclaurin_sum(square, 10, 101), SizeError);
}

TEST_CASE("central differences") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(central_difference(f, 1, 0.3, 1e-4) == doctest::Approx(std::cos(0.3)).epsilon(1e-8));
  CHECK(central_difference(f, 2, 0.3, 1e-3) == doctest::Approx(-std::sin(0.3)).epsilon(1e-6));
}
