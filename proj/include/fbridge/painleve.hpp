#pragma once

#include <vector>

namespace fbridge {

// bandwidth: sin(s(x-y))/(pi(x-y)) on (-1, 1), parameter s.
// interval:  sin(x-y)/(pi(x-y)) on (0, t), parameter t.
// The substitution x -> 2x/t - 1 maps one onto the other with t = 2s, so
// D_interval(t) = D_bandwidth(t/2).
enum class KernelFrame { bandwidth, interval };

// log det(I - K) in the given frame. A negative parameter gives
// log det(I + K) at its absolute value, which is the analytic continuation
// (the kernel is odd in s); 0 gives 0.
double sine_log_det(double parameter, int n_nodes, KernelFrame frame = KernelFrame::bandwidth);

struct LogDetGrid {
  std::vector<double> s_values;
  std::vector<double> log_det;
  int n_nodes = 0;
  double h = 0.0;
  KernelFrame frame = KernelFrame::bandwidth;
};

// count points start, start + h, ... in the given frame.
LogDetGrid det_grid(double start, double h, int count, int n_nodes,
                    KernelFrame frame = KernelFrame::bandwidth);

/// s = h, 2h, ..., s_max with h = s_max/steps, bandwidth frame.
/// s_max above 12 raises DomainError; fewer than 40 + 8 s_max nodes or a
/// nonpositive determinant raises ResolutionError.
LogDetGrid sine_det_grid(double s_max, int steps, int n_nodes);

struct QSamples {
  std::vector<double> s;
  std::vector<double> q;
  std::vector<double> q_prime;
  std::vector<double> q_second;
};

// q = -(log D)'' by central second differences; q' and q'' by further
// central differences. Output covers grid points 2 .. size-3.
QSamples q_function(const LogDetGrid& grid);

struct PainleveResidualReport {
  double s = 0.0;
  double q = 0.0;
  double q_prime = 0.0;
  double q_second = 0.0;
  // (s q'')^2 + 4 (s q' - q)(s q' - q + q'^2)
  double residual_paper = 0.0;
  // (t sigma'')^2 + 4 (t sigma' - sigma)(t sigma' - sigma + sigma'^2) with
  // sigma = t d/dt log D in the interval frame
  double residual_sigma = 0.0;
  // Derivatives are O(h^2) finite differences with this h (grid frame).
  double h = 0.0;
};

std::vector<PainleveResidualReport> painleve_residuals(const LogDetGrid& grid);

// Sigma-form residual at interval parameter t from a 5-point stencil of
// spacing h, computed directly.
double sigma_residual(double t, double h, int n_nodes);

struct AsymptoticFit {
  // log D(s) ~ a s^2 + b log s + C0 in the bandwidth frame
  double a = 0.0;
  double b = 0.0;
  double C0 = 0.0;
  double residual_rms = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  int points = 0;
  int n_nodes = 0;

  // Quadratic coefficient per unit interval length, i.e. in t = 2s.
  double a_interval() const { return a / 4.0; }
  // Constant in the interval frame, C0 - b log 2.
  double C0_interval() const;
};

AsymptoticFit asymptotic_fit(const LogDetGrid& grid, double window_lo = 4.0, double window_hi = 10.0);

// (1/12) log 2 + 3 zeta'(-1)
double asymptotic_constant();

struct SelectorLimitRow {
  int J = 0;
  double lambda = 0.0;
  double det = 0.0;           // (1 - lambda/J)^J
  double limit = 0.0;         // e^-lambda
  double deviation = 0.0;
  double log_det = 0.0;
  double displayed_leading = 0.0;  // -(J^2/(2 pi^2)) lambda
};

struct SelectorLeadingTerm {
  double lambda = 0.0;
  // Richardson estimate of lim log D_J(lambda) from the two largest J
  double measured_leading = 0.0;
  double displayed_leading_at_max_J = 0.0;
  bool displayed_compatible = false;
};

struct SelectorLimitStudy {
  std::vector<SelectorLimitRow> rows;
  std::vector<SelectorLeadingTerm> leading;
};

SelectorLimitStudy selector_limit_study(const std::vector<int>& J_list,
                                        const std::vector<double>& lambda_list);

}  // namespace fbridge
