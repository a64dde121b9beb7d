#include "fbridge/verification.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

#include <json.hpp>

#include "fbridge/analytic_bernoulli.hpp"
#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"
#include "fbridge/euler_maclaurin.hpp"
#include "fbridge/fredholm.hpp"
#include "fbridge/painleve.hpp"
#include "fbridge/quadrature.hpp"
#include "fbridge/selector.hpp"
#include "fbridge/zeta.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;

class Builder {
 public:
  explicit Builder(const SuiteConfig& config) : config_(config) {}

  void expect(std::string id, double measured, double expected, double tolerance, Provenance provenance,
              std::string note = {}) {
    Check c = make(std::move(id), measured, expected, tolerance, provenance, std::move(note));
    c.status = within(measured, expected, c.tolerance) ? Status::pass : Status::fail;
    checks_.push_back(std::move(c));
  }

  // A displayed claim known not to hold; it is recorded, not failed.
  void discrepancy(std::string id, double measured, double expected, double tolerance,
                   Provenance provenance, std::string note) {
    Check c = make(std::move(id), measured, expected, tolerance, provenance, std::move(note));
    c.status = within(measured, expected, c.tolerance) ? Status::pass : Status::discrepancy_documented;
    checks_.push_back(std::move(c));
  }

  void report(std::string id, double measured, Provenance provenance, std::string note) {
    Check c;
    c.check_id = std::move(id);
    c.measured = measured;
    c.provenance = provenance;
    c.note = std::move(note);
    checks_.push_back(std::move(c));
  }

  const SuiteConfig& config() const { return config_; }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  Check make(std::string id, double measured, double expected, double tolerance, Provenance provenance,
             std::string note) const {
    Check c;
    c.check_id = std::move(id);
    c.measured = measured;
    c.expected = expected;
    c.tolerance = std::max(tolerance, config_.tolerance_floor);
    c.provenance = provenance;
    c.note = std::move(note);
    return c;
  }

  const SuiteConfig& config_;
  std::vector<Check> checks_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

void combinatorics_suite(Builder& b) {
  b.expect("comb.bernoulli_b1", bernoulli_number(1).to_double(), -0.5, 0.0, Provenance::trivial,
           "generating-function convention");
  b.expect("comb.bernoulli_b12", bernoulli_number(12).to_double(), -691.0 / 2730.0, 0.0, Provenance::derived);
  const double b1m2 = norlund_polynomial(1, Rational(-2), Rational(0)).to_double();
  b.expect("comb.norlund_b1_alpha_minus2", b1m2, 1.0, 0.0, Provenance::derived, "B_1^(a)(0) = -a/2");
  b.discrepancy("comb.norlund_b1_alpha_minus2_displayed", b1m2, 0.5, 0.0, Provenance::paper,
                "displayed 1/2; with 1/2 the Stirling relation would give S(3,2) = 3/2");
  b.expect("comb.stirling_3_2_recurrence", stirling2(3, 2).get_d(), 3.0, 0.0, Provenance::paper);
  b.expect("comb.stirling_3_2_norlund", stirling2_norlund(3, 2).get_d(), 3.0, 0.0, Provenance::paper);
  b.expect("comb.stirling_3_2_contour", analytic_stirling_kernel(3.0, 2).value.real(), 3.0, 1e-8,
           Provenance::paper);

  int mismatches = 0;
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (stirling2(n, k) != stirling2_norlund(n, k)) ++mismatches;
    }
  }
  b.expect("comb.stirling_routes_agree_n30", mismatches, 0.0, 0.0, Provenance::derived,
           "count of (n,k) pairs where the two exact routes differ");

  const double coarse = std::abs(analytic_stirling_kernel(2.5, 2, CircularContour{1.0, 128}).value);
  const double fine_value = std::abs(analytic_stirling_kernel(2.5, 2, CircularContour{1.0, 256}).value);
  b.expect("comb.stirling_contour_refinement_s2.5", rel(coarse, fine_value), 0.0, 1e-9, Provenance::derived,
           "relative change 128 -> 256 nodes");

  SmoothFunction square{[](double x) { return x * x; },
                        [](int order, double x) { return order == 1 ? 2.0 * x : (order == 2 ? 2.0 : 0.0); }};
  b.expect("comb.euler_maclaurin_squares", euler_maclaurin_sum(square, 10, 1).total, 385.0, 1e-12,
           Provenance::derived);
  SmoothFunction harmonic{[](double x) { return 1.0 / x; }, [](int order, double x) {
                            double f = (order % 2 == 0) ? 1.0 : -1.0;
                            for (int j = 2; j <= order; ++j) f *= j;
                            return f / std::pow(x, order + 1);
                          }};
  EulerMaclaurinOptions opts;
  opts.base = 20;
  const EulerMaclaurinResult h = euler_maclaurin_sum(harmonic, 1000, 3, opts);
  b.expect("comb.euler_maclaurin_harmonic", h.total, h.reference_sum, 1e-12, Provenance::derived,
           "applied on [20, 1000]");
  // The displayed endpoint term (f(N) + f(0))/2 against the working (f(N) - f(0))/2, f = 1, N = 5.
  b.report("comb.euler_maclaurin_endpoint_sum_form", 5.0 + 1.0, Provenance::derived,
           "sum_{k=1}^{N} f(k) = 5; (f(N)+f(0))/2 overcounts by f(0), (f(N)-f(0))/2 does not");
}

void kernels_suite(Builder& b) {
  b.expect("kernels.selector_j1_cos", selector_value_delta({1, SelectorVariant::complex_sum}, 0.7).real(),
           std::cos(0.35), 1e-14, Provenance::paper);
  b.expect("kernels.selector_j2_quarter_turn", selector_value_delta({2, SelectorVariant::complex_sum}, pi / 2).imag(),
           1.0 / std::sqrt(2.0), 1e-14, Provenance::derived);

  double trace_dev = 0.0;
  for (int J = 1; J <= 64; ++J) {
    for (auto v : {SelectorVariant::complex_sum, SelectorVariant::real_part, SelectorVariant::paper_closed_form}) {
      trace_dev = std::max(trace_dev, std::abs(selector_trace(J, v, 8 * J) - 1.0));
    }
  }
  b.expect("kernels.selector_trace_j64", trace_dev, 0.0, 1e-12, Provenance::paper, "max |Tr S_J - 1|, J <= 64");

  double det_dev = 0.0;
  for (int J = 1; J <= 16; ++J) {
    for (double lambda : {-4.0, -2.5, -1.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
      const double closed = selector_determinant(J, lambda, SelectorVariant::complex_sum);
      const Complex lu = selector_determinant_lu(J, lambda, SelectorVariant::complex_sum, std::max(8 * J, 32));
      det_dev = std::max(det_dev, std::abs(lu - closed) / std::max(1.0, std::abs(closed)));
    }
  }
  b.expect("kernels.selector_det_closed_vs_lu", det_dev, 0.0, 1e-9, Provenance::derived,
           "J <= 16, |lambda| <= 4");

  const std::vector<double> spec2 = selector_spectrum(2, SelectorVariant::complex_sum, 32);
  b.expect("kernels.selector_spectrum_j2", std::max(std::abs(spec2[0] - 0.5), std::abs(spec2[1] - 0.5)), 0.0, 1e-10,
           Provenance::derived);

  const CompositionReport comp = composition_diagnostic(3, 48);
  b.expect("kernels.composition_scaled_j3", comp.scaled_deviation, 0.0, 1e-10, Provenance::derived,
           "S o S = S/J");
  b.expect("kernels.composition_unnormalized_j3", comp.projector_deviation, 0.0, 1e-10, Provenance::derived,
           "P o P = P for P = J S");
  b.discrepancy("kernels.composition_idempotent_claim", comp.idempotent_deviation, 0.0, 1e-10, Provenance::derived,
                "S_J o S_J = S_J fails for J > 1; the normalized kernel satisfies S o S = S/J");

  double example_dev = 0.0;
  double closed_dev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double d = -pi + 2.0 * pi * i / 100.0;
    const double example = std::cos(d) * std::cos(d / 2.0);
    example_dev = std::max(example_dev, std::abs(selector_value_delta({2, SelectorVariant::real_part}, d).real() - example));
    closed_dev = std::max(closed_dev,
                          std::abs(selector_value_delta({2, SelectorVariant::paper_closed_form}, d).real() - example));
  }
  b.expect("kernels.real_part_matches_j2_example", example_dev, 0.0, 1e-14, Provenance::derived);
  b.discrepancy("kernels.boxed_closed_form_vs_j2_example", closed_dev, 0.0, 1e-12, Provenance::derived,
                "sin(JD/2)cos(D/2)/(J sin(D/2)) differs from the sum and the J=2 example; "
                "sin(JD)/(2J sin(D/2)) matches");

  const SineRelationReport rel5 = sine_kernel_relation(5, default_relation_grid(10));
  b.expect("kernels.sine_relation_j5", rel5.relation_deviation, 0.0, 1e-12, Provenance::derived);
  b.expect("kernels.angle_identity_pi_3", angle_identity_deviation(pi / 3), 0.0, 1e-15, Provenance::derived);

  const SelectorLimitStudy study = selector_limit_study({2, 4, 8, 16, 32, 64, 128, 256, 512, 1000, 1024}, {1.0});
  for (const auto& row : study.rows) {
    if (row.J == 1000) {
      b.expect("kernels.selector_limit_j1000", row.det, std::exp(-1.0), 2e-4, Provenance::derived);
    }
  }
  const SelectorLeadingTerm& lead = study.leading.front();
  b.expect("kernels.selector_leading_term_measured", lead.measured_leading, -1.0, 1e-4, Provenance::derived,
           "lim log D_J(1) = -lambda");
  b.discrepancy("kernels.selector_leading_term_claim", lead.measured_leading, lead.displayed_leading_at_max_J, 1e-2,
                Provenance::derived, "-(J^2/(2 pi^2)) lambda at J = 1024 against the measured -lambda");
}

void fredholm_suite(Builder& b) {
  const int n_eig = b.config().nodes > 0 ? b.config().nodes : 200;
  const Spectrum min_spec = eigenvalues_sym(build_nystrom(KernelSpec::min_xy(), n_eig));
  for (int k = 1; k <= 5; ++k) {
    const double exact = 1.0 / ((k - 0.5) * (k - 0.5) * pi * pi);
    b.expect("fredholm.min_eigenvalue_" + std::to_string(k), rel(min_spec.eigenvalues[k - 1], exact), 0.0, 1e-7,
             Provenance::paper, "relative error");
  }

  for (double lambda : {1.0, 4.0, 9.0}) {
    const std::string tag = std::to_string(static_cast<int>(lambda));
    b.expect("fredholm.min_det_cos_l" + tag,
             fredholm_det(KernelSpec::min_xy(), lambda, 128, Sign::minus).value.real(), std::cos(std::sqrt(lambda)),
             1e-7, Provenance::paper);
    b.expect("fredholm.green_det_sinc_l" + tag,
             fredholm_det(KernelSpec::green_dirichlet_dirichlet(), lambda, 128, Sign::minus).value.real(),
             std::sin(std::sqrt(lambda)) / std::sqrt(lambda), 1e-7, Provenance::paper);
  }

  for (const auto& [name, kernel] : {std::pair{std::string("min"), KernelSpec::min_xy()},
                                     std::pair{std::string("sine"), KernelSpec::sine(1.0)}}) {
    const NystromSystem sys = build_nystrom(kernel, 64);
    for (double lambda : {0.3, 0.7}) {
      const double lu = fredholm_det(sys, lambda, Sign::minus, Route::lu).value.real();
      const double ep = fredholm_det(sys, lambda, Sign::minus, Route::eigenproduct).value.real();
      const double ts = fredholm_det(sys, lambda, Sign::minus, Route::trace_series).value.real();
      const double dev = std::max({rel(ep, lu), rel(ts, lu)});
      b.expect("fredholm.route_agreement_" + name + "_l" + format_double(lambda), dev, 0.0, 1e-8,
               Provenance::derived, "max relative deviation from LU");
    }
  }

  auto u = [](double x) { return 1.0 + x; };
  auto v = [](double x) { return x * x; };
  const double uv = 1.0 / 3.0 + 1.0 / 4.0;
  b.expect("fredholm.rank_one", fredholm_det(KernelSpec::rank_one(u, v, 2.0), 0.5, 16, Sign::plus).value.real(),
           1.0 + 0.5 * 2.0 * uv, 1e-13, Provenance::paper);

  const KernelSpec projector = KernelSpec::custom(
      [](double x, double y) { return 1.0 + 3.0 * (2.0 * x - 1.0) * (2.0 * y - 1.0); }, {0.0, 1.0}, true);
  b.expect("fredholm.projector_rank2", fredholm_det(projector, 0.5, 16, Sign::minus).value.real(), 0.25, 1e-13,
           Provenance::paper);

  const ResolventSolution sol =
      resolvent_solve(KernelSpec::min_xy(), pi * pi / 4.0, [](double x) { return x; }, 64);
  b.expect("fredholm.resolvent_singular_flag", sol.singular ? 1.0 : 0.0, 1.0, 0.0, Provenance::derived,
           "lambda = 1/mu_1 for the min kernel");
}

void zeta_suite(Builder& b) {
  b.expect("zeta.riemann_2", riemann_zeta(2.0).value.real(), pi * pi / 6.0, 1e-12, Provenance::derived);
  b.expect("zeta.riemann_minus1", riemann_zeta(-1.0).value.real(), -1.0 / 12.0, 1e-14, Provenance::paper);
  b.expect("zeta.riemann_0", riemann_zeta(0.0).value.real(), -0.5, 1e-14, Provenance::derived);
  b.expect("zeta.hurwitz_2_half", hurwitz_zeta(2.0, 0.5).value.real(), pi * pi / 2.0, 1e-11, Provenance::derived);
  b.expect("zeta.derivative_0", zeta_derivative(0.0), -0.5 * std::log(2.0 * pi), 1e-9, Provenance::paper);
  b.expect("zeta.derivative_minus1", zeta_derivative(-1.0), -0.16542114370045092, 1e-8, Provenance::derived);

  const double dd = det_zeta_laplacian(BoundaryCondition::DD);
  b.expect("zeta.det_laplacian_dd", dd, 2.0, 1e-9, Provenance::derived,
           "zeta_L'(0) = log(pi) + 2 zeta'(0) = -log 2");
  b.discrepancy("zeta.det_laplacian_dd_displayed", dd, 2.0 * pi, 1e-9, Provenance::paper,
                "displayed value 2 pi; the pi^(-2s) factor contributes log(pi) to zeta_L'(0)");
  b.expect("zeta.det_laplacian_nn", det_zeta_laplacian(BoundaryCondition::NN), dd, 1e-12, Provenance::trivial);
  b.expect("zeta.det_laplacian_dn", det_zeta_laplacian(BoundaryCondition::DN), 2.0, 1e-9, Provenance::derived);

  for (double lambda : {1.0, 4.0, 9.0}) {
    const std::string tag = std::to_string(static_cast<int>(lambda));
    b.expect("zeta.det_ratio_bridge_dd_l" + tag, det_ratio(lambda, BoundaryCondition::DD),
             fredholm_det(KernelSpec::green_dirichlet_dirichlet(), lambda, 128, Sign::minus).value.real(), 1e-7,
             Provenance::derived);
    b.expect("zeta.det_ratio_bridge_dn_l" + tag, det_ratio(lambda, BoundaryCondition::DN),
             fredholm_det(KernelSpec::min_xy(), lambda, 128, Sign::minus).value.real(), 1e-7, Provenance::derived);
  }
  b.expect("zeta.det_ratio_minus1", det_ratio(-1.0, BoundaryCondition::DD), std::sinh(1.0), 1e-14,
           Provenance::derived);

  double even_dev = 0.0;
  for (int m = 1; m <= 15; ++m) even_dev = std::max(even_dev, rel(riemann_zeta(2.0 * m).value.real(), zeta_even(m)));
  b.expect("zeta.zeta_even_agreement", even_dev, 0.0, 1e-12, Provenance::paper, "max relative deviation, m <= 15");

  const LogSincSeries series = log_sinc_series(20);
  b.expect("zeta.log_sinc_x1", series.evaluate(1.0), std::log(std::sin(1.0)), 1e-10, Provenance::derived);
  b.expect("zeta.sinc_taylor_m1", series.sinc_taylor[1].to_double(), -1.0 / 6.0, 0.0, Provenance::paper);
  b.discrepancy("zeta.sinc_bernoulli_claim", series.bernoulli_claim[1].to_double(),
                series.sinc_taylor[1].to_double(), 0.0, Provenance::derived,
                "sin(sqrt l)/sqrt l has coefficients (-1)^m/(2m+1)!, not B_2m/(2m)!");

  const GlaisherReport g = glaisher_constant();
  b.expect("zeta.glaisher_A", g.A, g.displayed_value, 1e-9, Provenance::paper);
  b.discrepancy("zeta.glaisher_formula_claim", g.alternative_formula_residual, 0.0, 1e-9, Provenance::derived,
                "zeta'(-1) = -log(2 pi)/12 + log A contradicts A = 1.2824...; log A = 1/12 - zeta'(-1) holds");

  double coincidence = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const RationalPolynomial poly = bernoulli_polynomial(n);
    for (int j = 0; j < 10; ++j) {
      const double x = 0.05 + 0.09 * j;
      coincidence = std::max(coincidence, std::abs(analytic_bernoulli(static_cast<double>(n), x).value.real() -
                                                   poly.evaluate(x)));
    }
  }
  b.expect("zeta.analytic_bernoulli_integer", coincidence, 0.0, 1e-10, Provenance::derived, "n <= 10, 10 points");
  const AnalyticBernoulliValue fourier = fourier_bernoulli(2.0, 0.25, 10000);
  const double hurwitz = analytic_bernoulli(2.0, 0.25).value.real();
  b.expect("zeta.fourier_bernoulli_2_quarter", std::abs(fourier.value.real() - hurwitz), 0.0, *fourier.tail_bound,
           Provenance::derived, "tolerance is the reported tail bound");
  b.discrepancy("zeta.fourier_bernoulli_displayed_prefactor",
                fourier_bernoulli(2.0, 0.25, 10000, FourierNormalization::displayed).value.real(), hurwitz, 1e-6,
                Provenance::derived, "prefactor Gamma(s+1)/(2 pi)^s is off by -(2 pi)^-s");
}

void painleve_suite(Builder& b) {
  const SuiteConfig& cfg = b.config();
  const int n_small = cfg.nodes > 0 ? cfg.nodes : 150;
  const double s0 = 0.01;
  b.expect("painleve.small_s_log_det", sine_log_det(s0, n_small), -2.0 * s0 / pi - 2.0 * s0 * s0 / (pi * pi), 1e-6,
           Provenance::derived, "-Tr K - Tr K^2/2 at s = 0.01");

  const int n_grid = cfg.nodes > 0 ? cfg.nodes : 120;
  const LogDetGrid mono = sine_det_grid(8.0, 50, n_grid);
  bool decreasing = mono.log_det.front() < 0.0;
  for (std::size_t i = 1; i < mono.log_det.size(); ++i) decreasing = decreasing && mono.log_det[i] < mono.log_det[i - 1];
  b.expect("painleve.log_det_decreasing", decreasing ? 1.0 : 0.0, 1.0, 0.0, Provenance::derived, "50 points to s = 8");

  double route_dev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double s = 0.4 * i;
    const NystromSystem sys = build_nystrom(KernelSpec::sine(s), n_grid);
    const double lu = fredholm_det(sys, 1.0, Sign::minus, Route::lu).log_abs;
    const double ep = fredholm_det(sys, 1.0, Sign::minus, Route::eigenproduct).log_abs;
    route_dev = std::max(route_dev, std::abs(lu - ep) / std::max(1.0, std::abs(lu)));
  }
  b.expect("painleve.lu_vs_eigenproduct", route_dev, 0.0, 1e-9, Provenance::derived,
           "max |log D| difference relative to max(1, |log D|), s <= 8");

  const LogDetGrid qgrid = det_grid(0.4, 0.05, 115, n_grid);
  const QSamples qs = q_function(qgrid);
  double qmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < qs.s.size(); ++i) {
    if (qs.s[i] >= 0.5 - 1e-9 && qs.s[i] <= 6.0 + 1e-9) qmin = std::min(qmin, qs.q[i]);
  }
  b.expect("painleve.q_positive", qmin > 0.0 ? 1.0 : 0.0, 1.0, 0.0, Provenance::derived, "min q on [0.5, 6]");

  const double h = cfg.grid_step.value_or(0.02);
  for (int t = 1; t <= 4; ++t) {
    const double fine = sigma_residual(t, h, n_small);
    const double coarse = sigma_residual(t, 2.0 * h, n_small);
    const std::string tag = std::to_string(t);
    b.expect("painleve.sigma_residual_t" + tag, std::abs(fine), 0.0, 1e-3, Provenance::derived,
             "interval frame, h = " + format_double(h));
    b.expect("painleve.sigma_refinement_t" + tag, coarse / fine, 4.0, 0.25, Provenance::derived,
             "residual ratio for h doubling");
  }
  const LogDetGrid around2 = det_grid(2.0 - 3.0 * h, h, 7, n_small);
  b.report("painleve.paper_equation_residual_s2", painleve_residuals(around2)[1].residual_paper, Provenance::derived,
           "q = -(log D)'' in the displayed equation; no threshold");

  const double hi = cfg.s_max.value_or(10.0);
  const int n_fit = cfg.nodes > 0 ? cfg.nodes : 300;
  const int count = static_cast<int>(std::lround((hi - 4.0) / 0.1)) + 1;
  const AsymptoticFit fit = asymptotic_fit(det_grid(4.0, 0.1, count, n_fit), 4.0, hi);
  b.expect("painleve.fit_log_coefficient", fit.b, -0.25, 0.02, Provenance::paper);
  b.expect("painleve.fit_constant", fit.C0, asymptotic_constant(), 0.02, Provenance::derived,
           "bandwidth frame, oracle log(2)/12 + 3 zeta'(-1)");
  b.expect("painleve.fit_quadratic_normalized", fit.a_interval(), -0.125, 1e-3, Provenance::derived,
           "a/4, per unit interval length");
  b.discrepancy("painleve.fit_quadratic_displayed", fit.a, -1.0 / (2.0 * pi * pi), 1e-3, Provenance::paper,
                "-s^2/(2 pi^2) against the fitted -s^2/2");
  b.expect("painleve.fit_rms", fit.residual_rms, 0.0, 1e-3, Provenance::derived);
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy_documented: return "discrepancy_documented";
  }
  return "unknown";
}

const char* to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::paper: return "paper";
    case Provenance::trivial: return "trivial";
    case Provenance::derived: return "derived";
  }
  return "unknown";
}

bool within(double measured, double expected, double tolerance) {
  if (!std::isfinite(measured)) return false;
  return std::abs(measured - expected) <= tolerance * std::max(1.0, std::abs(expected));
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"combinatorics", "kernels", "fredholm", "zeta", "painleve", "all"};
  return names;
}

const std::vector<std::string>& sweep_targets() {
  static const std::vector<std::string> names = {"sine_det", "selector_det", "det_ratio"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  using Runner = void (*)(Builder&);
  static const std::map<std::string, Runner> runners = {{"combinatorics", combinatorics_suite},
                                                        {"kernels", kernels_suite},
                                                        {"fredholm", fredholm_suite},
                                                        {"zeta", zeta_suite},
                                                        {"painleve", painleve_suite}};
  Builder builder(config);
  if (name == "all") {
    for (const auto& [_, run] : runners) run(builder);
  } else {
    const auto it = runners.find(name);
    if (it == runners.end()) throw UsageError("unknown suite '" + name + "'");
    it->second(builder);
  }
  SuiteReport report;
  report.suite = name;
  report.checks = builder.take();
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
  return report;
}

SweepTable run_sweep(const std::string& target, const SweepConfig& config) {
  SweepTable table;
  table.target = target;
  if (target == "sine_det") {
    const double h = config.grid_step.value_or(0.1);
    const double s_max = config.s_max.value_or(6.0);
    if (!(h > 0.0) || !(s_max >= h)) throw UsageError("sine_det: need 0 < grid step <= s-max");
    const int steps = static_cast<int>(std::lround(s_max / h));
    const double top = steps * h + 2.0 * h;
    const int nodes = config.nodes > 0 ? config.nodes : std::max(150, 40 + static_cast<int>(std::ceil(8.0 * top)));
    // Two extra points on each side so every row has full stencils; the
    // points at s <= 0 use det(I + K).
    const LogDetGrid grid = det_grid(-h, h, steps + 4, nodes);
    const auto residuals = painleve_residuals(grid);
    table.columns = {"s", "log_det", "q", "q_prime", "q_second", "residual_paper", "residual_sigma"};
    for (std::size_t k = 0; k < residuals.size(); ++k) {
      const auto& r = residuals[k];
      table.rows.push_back({r.s, grid.log_det[k + 2], r.q, r.q_prime, r.q_second, r.residual_paper, r.residual_sigma});
    }
  } else if (target == "selector_det") {
    table.columns = {"J", "lambda", "det", "exp_minus_lambda", "deviation"};
    std::vector<int> Js;
    for (int J = 2; J <= 1024; J *= 2) Js.push_back(J);
    for (const auto& row : selector_limit_study(Js, {1.0}).rows) {
      table.rows.push_back({static_cast<double>(row.J), row.lambda, row.det, row.limit, row.deviation});
    }
  } else if (target == "det_ratio") {
    const double h = config.grid_step.value_or(0.5);
    const double lo = -4.0;
    const double hi = config.s_max.value_or(25.0);
    if (!(h > 0.0) || !(hi > lo)) throw UsageError("det_ratio: need a positive step and an upper end above -4");
    table.columns = {"lambda", "dd", "dn"};
    const long count = std::lround((hi - lo) / h);
    for (long i = 0; i <= count; ++i) {
      const double lambda = lo + i * h;
      table.rows.push_back({lambda, det_ratio(lambda, BoundaryCondition::DD), det_ratio(lambda, BoundaryCondition::DN)});
    }
  } else {
    throw UsageError("unknown sweep target '" + target + "'");
  }
  return table;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

std::string report_csv(const SuiteReport& report) {
  std::string out = "check_id,status,measured,expected,tolerance,provenance,note\n";
  for (const Check& c : report.checks) {
    out += csv_field(c.check_id) + ',' + to_string(c.status) + ',' + format_double(c.measured) + ',' +
           (c.expected ? format_double(*c.expected) : std::string("reported-only")) + ',' +
           format_double(c.tolerance) + ',' + to_string(c.provenance) + ',' + csv_field(c.note) + '\n';
  }
  return out;
}

std::string report_json(const SuiteReport& report, const std::optional<std::string>& timestamp) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  if (timestamp) j["timestamp"] = *timestamp;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json e;
    e["check_id"] = c.check_id;
    e["status"] = to_string(c.status);
    e["measured"] = number(c.measured);
    if (c.expected) {
      e["expected"] = number(*c.expected);
    } else {
      e["expected"] = "reported-only";
    }
    e["tolerance"] = number(c.tolerance);
    e["provenance"] = to_string(c.provenance);
    e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string sweep_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += '\n';
  }
  return out;
}

std::string sweep_json(const SweepTable& table, const std::optional<std::string>& timestamp) {
  nlohmann::ordered_json j;
  j["target"] = table.target;
  if (timestamp) j["timestamp"] = *timestamp;
  j["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double x : row) r.push_back(number(x));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace fbridge
