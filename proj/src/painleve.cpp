#include "fbridge/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbridge/errors.hpp"
#include "fbridge/fredholm.hpp"
#include "fbridge/linalg.hpp"
#include "fbridge/zeta.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;

double bandwidth_of(double parameter, KernelFrame frame) {
  return frame == KernelFrame::bandwidth ? std::abs(parameter) : std::abs(parameter) / 2.0;
}

void check_resolution(double bandwidth_max, int n_nodes) {
  if (bandwidth_max > 12.0) throw DomainError("sine determinant: bandwidth beyond 12");
  if (n_nodes < 40 + 8.0 * bandwidth_max) {
    throw ResolutionError("sine determinant: need at least " + std::to_string(40 + static_cast<int>(std::ceil(8.0 * bandwidth_max))) +
                      " nodes for bandwidth " + std::to_string(bandwidth_max));
  }
}

struct Derivatives {
  double d1, d2, d3;
};

// O(h^2) central differences of L at index i.
Derivatives differences(const std::vector<double>& L, std::size_t i, double h) {
  Derivatives d;
  d.d1 = (L[i + 1] - L[i - 1]) / (2.0 * h);
  d.d2 = (L[i + 1] - 2.0 * L[i] + L[i - 1]) / (h * h);
  d.d3 = (L[i + 2] - 2.0 * L[i + 1] + 2.0 * L[i - 1] - L[i - 2]) / (2.0 * h * h * h);
  return d;
}

double sigma_form(double t, const Derivatives& d) {
  const double sigma = t * d.d1;
  const double sp = d.d1 + t * d.d2;
  const double spp = 2.0 * d.d2 + t * d.d3;
  const double u = t * sp - sigma;
  return (t * spp) * (t * spp) + 4.0 * u * (u + sp * sp);
}

}  // namespace

double sine_log_det(double parameter, int n_nodes, KernelFrame frame) {
  if (parameter == 0.0) return 0.0;
  const double p = std::abs(parameter);
  const KernelSpec kernel = frame == KernelFrame::bandwidth ? KernelSpec::sine(p, {-1.0, 1.0})
                                                            : KernelSpec::sine(1.0, {0.0, p});
  const Sign sign = parameter > 0.0 ? Sign::minus : Sign::plus;
  const FredholmResult r = fredholm_det(kernel, 1.0, n_nodes, sign, Route::lu);
  if (r.singular || r.phase.real() <= 0.0) {
    throw ResolutionError("sine determinant not positive at parameter " + std::to_string(parameter) +
                          "; increase the node count");
  }
  return r.log_abs;
}

LogDetGrid det_grid(double start, double h, int count, int n_nodes, KernelFrame frame) {
  if (!(h > 0.0)) throw DomainError("det_grid: step must be positive");
  if (count < 1) throw DomainError("det_grid: need at least one point");
  const double last = start + (count - 1) * h;
  check_resolution(std::max(bandwidth_of(start, frame), bandwidth_of(last, frame)), n_nodes);
  LogDetGrid grid;
  grid.h = h;
  grid.n_nodes = n_nodes;
  grid.frame = frame;
  for (int i = 0; i < count; ++i) {
    const double s = start + i * h;
    grid.s_values.push_back(s);
    grid.log_det.push_back(sine_log_det(s, n_nodes, frame));
  }
  return grid;
}

LogDetGrid sine_det_grid(double s_max, int steps, int n_nodes) {
  if (!(s_max > 0.0)) throw DomainError("sine_det_grid: s_max must be positive");
  if (steps < 1) throw DomainError("sine_det_grid: need steps >= 1");
  const double h = s_max / steps;
  return det_grid(h, h, steps, n_nodes, KernelFrame::bandwidth);
}

QSamples q_function(const LogDetGrid& grid) {
  const std::size_t n = grid.log_det.size();
  if (n < 7) throw DomainError("q_function: need at least 7 grid points");
  const double h = grid.h;
  std::vector<double> q(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    q[i] = -(grid.log_det[i + 1] - 2.0 * grid.log_det[i] + grid.log_det[i - 1]) / (h * h);
  }
  QSamples out;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    out.s.push_back(grid.s_values[i]);
    out.q.push_back(q[i]);
    out.q_prime.push_back((q[i + 1] - q[i - 1]) / (2.0 * h));
    out.q_second.push_back((q[i + 1] - 2.0 * q[i] + q[i - 1]) / (h * h));
  }
  return out;
}

std::vector<PainleveResidualReport> painleve_residuals(const LogDetGrid& grid) {
  const QSamples qs = q_function(grid);
  const double scale = grid.frame == KernelFrame::bandwidth ? 2.0 : 1.0;
  const double ht = scale * grid.h;
  std::vector<PainleveResidualReport> out;
  for (std::size_t k = 0; k < qs.s.size(); ++k) {
    const std::size_t i = k + 2;
    PainleveResidualReport r;
    r.s = qs.s[k];
    r.q = qs.q[k];
    r.q_prime = qs.q_prime[k];
    r.q_second = qs.q_second[k];
    r.h = grid.h;
    const double u = r.s * r.q_prime - r.q;
    r.residual_paper = (r.s * r.q_second) * (r.s * r.q_second) + 4.0 * u * (u + r.q_prime * r.q_prime);
    r.residual_sigma = sigma_form(scale * r.s, differences(grid.log_det, i, ht));
    out.push_back(r);
  }
  return out;
}

double sigma_residual(double t, double h, int n_nodes) {
  const LogDetGrid grid = det_grid(t - 2.0 * h, h, 5, n_nodes, KernelFrame::interval);
  return sigma_form(t, differences(grid.log_det, 2, h));
}

double AsymptoticFit::C0_interval() const { return C0 - b * std::log(2.0); }

AsymptoticFit asymptotic_fit(const LogDetGrid& grid, double window_lo, double window_hi) {
  if (!(window_lo > 0.0) || !(window_hi > window_lo)) throw DomainError("asymptotic_fit: bad window");
  const double scale = grid.frame == KernelFrame::bandwidth ? 1.0 : 0.5;
  std::vector<double> s;
  std::vector<double> y;
  for (std::size_t i = 0; i < grid.s_values.size(); ++i) {
    const double si = scale * grid.s_values[i];
    if (si >= window_lo - 1e-9 && si <= window_hi + 1e-9) {
      s.push_back(si);
      y.push_back(grid.log_det[i]);
    }
  }
  if (s.size() < 4 || s.front() > window_lo + 0.5 || s.back() < window_hi - 0.5) {
    throw DomainError("asymptotic_fit: window not covered by the grid");
  }
  RealMatrix A(s.size(), 3);
  for (std::size_t i = 0; i < s.size(); ++i) {
    A(i, 0) = s[i] * s[i];
    A(i, 1) = std::log(s[i]);
    A(i, 2) = 1.0;
  }
  const std::vector<double> c = least_squares(A, y);
  AsymptoticFit fit;
  fit.a = c[0];
  fit.b = c[1];
  fit.C0 = c[2];
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double r = fit.a * A(i, 0) + fit.b * A(i, 1) + fit.C0 - y[i];
    acc += r * r;
  }
  fit.residual_rms = std::sqrt(acc / s.size());
  fit.window_lo = window_lo;
  fit.window_hi = window_hi;
  fit.points = static_cast<int>(s.size());
  fit.n_nodes = grid.n_nodes;
  return fit;
}

double asymptotic_constant() { return std::log(2.0) / 12.0 + 3.0 * zeta_derivative(-1.0); }

SelectorLimitStudy selector_limit_study(const std::vector<int>& J_list,
                                        const std::vector<double>& lambda_list) {
  if (J_list.empty()) throw DomainError("selector_limit_study: empty J list");
  std::vector<int> Js = J_list;
  std::sort(Js.begin(), Js.end());
  Js.erase(std::unique(Js.begin(), Js.end()), Js.end());
  if (Js.front() < 1) throw DomainError("selector_limit_study: J must be >= 1");

  SelectorLimitStudy study;
  for (double lambda : lambda_list) {
    std::vector<double> logs;
    for (int J : Js) {
      SelectorLimitRow row;
      row.J = J;
      row.lambda = lambda;
      row.det = std::pow(1.0 - lambda / J, J);
      row.limit = std::exp(-lambda);
      row.deviation = std::abs(row.det - row.limit);
      row.log_det = J * std::log(std::abs(1.0 - lambda / J));
      row.displayed_leading = -(static_cast<double>(J) * J / (2.0 * pi * pi)) * lambda;
      logs.push_back(row.log_det);
      study.rows.push_back(row);
    }
    SelectorLeadingTerm lead;
    lead.lambda = lambda;
    const std::size_t k = Js.size();
    if (k >= 2) {
      // log D_J = l + c/J + O(1/J^2)
      const double J1 = Js[k - 2];
      const double J2 = Js[k - 1];
      lead.measured_leading = (J2 * logs[k - 1] - J1 * logs[k - 2]) / (J2 - J1);
    } else {
      lead.measured_leading = logs.back();
    }
    lead.displayed_leading_at_max_J = study.rows.back().displayed_leading;
    lead.displayed_compatible = std::abs(lead.measured_leading - lead.displayed_leading_at_max_J) <=
                                1e-2 * std::max(1.0, std::abs(lead.displayed_leading_at_max_J));
    study.leading.push_back(lead);
  }
  return study;
}

}  // namespace fbridge
