#pragma once

#include <vector>

#include "fbridge/quadrature.hpp"
#include "fbridge/rational.hpp"

namespace fbridge {

struct ZetaConfig {
  int N_terms = 20;
  int M_corrections = 15;
};

struct ZetaEvaluation {
  Complex s;
  Complex value;
  int N_terms = 0;
  int M_corrections = 0;
  // |last Euler-Maclaurin correction retained|
  double error_heuristic = 0.0;
};

/// zeta(s, x) = sum_{k<N} (k+x)^-s + (N+x)^(1-s)/(s-1) + (N+x)^-s/2
///            + sum_{m<=M} B_2m/(2m)! (s)_(2m-1) (N+x)^(-s-2m+1)
/// At a nonpositive integer s the correction sum terminates, so N = 0 is
/// used and the value is the Bernoulli polynomial up to rounding.
ZetaEvaluation hurwitz_zeta(Complex s, double x, const ZetaConfig& config = {});
ZetaEvaluation riemann_zeta(Complex s, const ZetaConfig& config = {});

// Richardson-extrapolated central differences, steps h and h/2.
double zeta_derivative(double s0, double h = 1e-3);
double hurwitz_zeta_derivative(double s0, double x, double h = 1e-3);

enum class BoundaryCondition { DD, NN, DN, ND };

const char* to_string(BoundaryCondition bc);

// exp(-zeta_L'(0)) for -d^2/dx^2 on (0,1) with the eigenvalues (n pi)^2
// (DD, NN) or ((n - 1/2) pi)^2 (DN, ND), n >= 1.
double det_zeta_laplacian(BoundaryCondition bc);

// sin(sqrt l)/sqrt l for DD/NN and cos(sqrt l) for DN/ND, continued to l < 0.
double det_ratio(double lambda, BoundaryCondition bc);

// (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!), 1 <= m <= 50.
double zeta_even(int m);

struct LogSincSeries {
  // coefficients[m-1] = -zeta(2m)/(m pi^(2m)), m = 1..M
  std::vector<double> coefficients;
  // Taylor coefficients of sin(sqrt l)/sqrt l, (-1)^m/(2m+1)!, m = 0..M
  std::vector<Rational> sinc_taylor;
  // B_2m/(2m)!, the identification to compare against, m = 0..M
  std::vector<Rational> bernoulli_claim;
  // First m >= 1 where the two lists differ, 0 if none.
  int first_mismatch = 0;

  // log(sin x / x) from the truncated series.
  double evaluate(double x) const;
};

LogSincSeries log_sinc_series(int M);

struct GlaisherReport {
  double A = 0.0;
  double zeta_prime_minus_one = 0.0;
  double displayed_value = 1.2824271291;
  double displayed_deviation = 0.0;
  // |zeta'(-1) + log(2 pi)/12 - log A| for the displayed alternative formula
  double alternative_formula_residual = 0.0;
};

// A = exp(1/12 - zeta'(-1)).
GlaisherReport glaisher_constant();

}  // namespace fbridge
