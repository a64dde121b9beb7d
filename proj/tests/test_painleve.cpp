#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fbridge/errors.hpp"
#include "fbridge/painleve.hpp"

using namespace fbridge;
using std::numbers::pi;

namespace {

LogDetGrid synthetic(double start, double h, int count, double (*L)(double)) {
  LogDetGrid g;
  g.h = h;
  for (int i = 0; i < count; ++i) {
    g.s_values.push_back(start + i * h);
    g.log_det.push_back(L(start + i * h));
  }
  return g;
}

double log_zeta_prime_minus1() {
  // 1/12 - log A with log A from zeta'(2) by direct summation
  const int N = 20000;
  double zp2 = 0.0;
  for (int n = N; n >= 2; --n) zp2 -= std::log(n) / (static_cast<double>(n) * n);
  zp2 -= (std::log(N) + 1.0) / N;
  const double logA = (std::numbers::egamma + std::log(2.0 * pi)) / 12.0 - zp2 / (2.0 * pi * pi);
  return 1.0 / 12.0 - logA;
}

}  // namespace

TEST_CASE("small parameter expansion") {
  CHECK(sine_log_det(0.0, 60) == 0.0);
  for (double s : {0.01, 0.02}) {
    CHECK(std::abs(sine_log_det(s, 150) - (-2.0 * s / pi - 2.0 * s * s / (pi * pi))) < 1e-6);
  }
  // first order alone misses by about 2 s^2/pi^2
  CHECK(std::abs(sine_log_det(0.01, 150) + 0.02 / pi) > 1e-5);
}

TEST_CASE("frames agree under t = 2s") {
  for (double s : {0.5, 1.7, 3.0}) {
    CHECK(sine_log_det(2.0 * s, 100, KernelFrame::interval) ==
          doctest::Approx(sine_log_det(s, 100, KernelFrame::bandwidth)).epsilon(1e-12));
  }
}

TEST_CASE("negative parameter is det(I + K)") {
  const double s = 0.01;
  CHECK(std::abs(sine_log_det(-s, 150) - (2.0 * s / pi - 2.0 * s * s / (pi * pi))) < 1e-6);
  CHECK(sine_log_det(-1.0, 80) > 0.0);
}

TEST_CASE("log determinant decreases") {
  const LogDetGrid g = sine_det_grid(8.0, 40, 120);
  REQUIRE(g.log_det.size() == 40);
  CHECK(g.s_values.front() == doctest::Approx(0.2));
  CHECK(g.s_values.back() == doctest::Approx(8.0));
  for (std::size_t i = 1; i < g.log_det.size(); ++i) CHECK(g.log_det[i] < g.log_det[i - 1]);
}

TEST_CASE("resolution guards") {
  CHECK_THROWS_AS(det_grid(1.0, 0.1, 10, 40), ResolutionError);
  CHECK_THROWS_AS(det_grid(11.0, 0.5, 5, 400), DomainError);
  CHECK_THROWS_AS(det_grid(1.0, 0.0, 10, 200), DomainError);
  CHECK_THROWS_AS(sine_det_grid(-1.0, 10, 200), DomainError);
}

TEST_CASE("q function on exact cubic data") {
  const LogDetGrid g = synthetic(1.0, 0.1, 11, [](double s) { return -s * s * s; });
  const QSamples q = q_function(g);
  REQUIRE(q.s.size() == 7);
  for (std::size_t k = 0; k < q.s.size(); ++k) {
    CHECK(q.q[k] == doctest::Approx(6.0 * q.s[k]).epsilon(1e-9));
    CHECK(q.q_prime[k] == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(std::abs(q.q_second[k]) < 1e-5);
  }
  CHECK_THROWS_AS(q_function(synthetic(1.0, 0.1, 6, [](double s) { return s; })), DomainError);
}

TEST_CASE("residual formulas on exact data") {
  // L = -s^3 gives q = 6s, q' = 6, q'' = 0, so the displayed residual is
  // 4 (6s - 6s)(0 + 36) = 0
  const LogDetGrid g = synthetic(1.0, 0.05, 9, [](double s) { return -s * s * s; });
  for (const auto& r : painleve_residuals(g)) CHECK(std::abs(r.residual_paper) < 1e-4);
  // L = c t gives sigma = c t, and t sigma' - sigma = 0 kills both terms;
  // L = c log t gives sigma = c and leaves 4 c^2
  LogDetGrid lg = synthetic(2.0, 0.05, 9, [](double s) { return -0.3 * s; });
  lg.frame = KernelFrame::interval;
  for (const auto& r : painleve_residuals(lg)) CHECK(std::abs(r.residual_sigma) < 1e-9);
  LogDetGrid cg = synthetic(2.0, 0.05, 9, [](double s) { return 0.3 * std::log(s); });
  cg.frame = KernelFrame::interval;
  for (const auto& r : painleve_residuals(cg)) CHECK(r.residual_sigma == doctest::Approx(0.36).epsilon(1e-3));
}

TEST_CASE("sigma form residual is second order in h") {
  for (double t : {1.0, 2.5, 4.0}) {
    const double fine = sigma_residual(t, 0.02, 150);
    const double coarse = sigma_residual(t, 0.04, 150);
    CHECK(std::abs(fine) < 1e-3);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.25));
  }
}

TEST_CASE("asymptotic fit recovers exact coefficients") {
  const LogDetGrid g = synthetic(4.0, 0.1, 61, [](double s) { return -0.5 * s * s - 0.25 * std::log(s) - 0.4; });
  const AsymptoticFit f = asymptotic_fit(g, 4.0, 10.0);
  CHECK(f.points == 61);
  CHECK(f.a == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(f.b == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(f.C0 == doctest::Approx(-0.4).epsilon(1e-9));
  CHECK(f.a_interval() == doctest::Approx(-0.125).epsilon(1e-10));
  CHECK(f.C0_interval() == doctest::Approx(-0.4 + 0.25 * std::log(2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(asymptotic_fit(g, 2.0, 10.0), DomainError);
  CHECK_THROWS_AS(asymptotic_fit(g, 5.0, 4.0), DomainError);
}

TEST_CASE("sine kernel asymptotics") {
  const AsymptoticFit f = asymptotic_fit(det_grid(4.0, 0.1, 61, 300));
  CHECK(f.b == doctest::Approx(-0.25).epsilon(0.02 / 0.25));
  const double oracle = std::log(2.0) / 12.0 + 3.0 * log_zeta_prime_minus1();
  CHECK(asymptotic_constant() == doctest::Approx(oracle).epsilon(1e-8));
  CHECK(std::abs(f.C0 - oracle) < 0.02);
  CHECK(f.a_interval() == doctest::Approx(-0.125).epsilon(1e-2));
  CHECK(f.residual_rms < 1e-3);
}

TEST_CASE("selector limit study") {
  const SelectorLimitStudy st = selector_limit_study({1024, 2, 512, 2}, {1.0, 2.0});
  REQUIRE(st.rows.size() == 6);
  CHECK(st.rows[0].J == 2);
  CHECK(st.rows[0].det == doctest::Approx(0.25));
  CHECK(st.rows[3].det == 0.0);
  for (const auto& lead : st.leading) {
    CHECK(lead.measured_leading == doctest::Approx(-lead.lambda).epsilon(1e-4));
    CHECK_FALSE(lead.displayed_compatible);
  }
  CHECK_THROWS_AS(selector_limit_study({}, {1.0}), DomainError);
}
