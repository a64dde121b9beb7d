#pragma once

#include <functional>
#include <vector>

#include "fbridge/combinatorics.hpp"

namespace fbridge {

// f together with an optional derivative provider. When derivative is empty
// the summation falls back to central differences and flags the result.
struct SmoothFunction {
  std::function<double(double)> value;
  std::function<double(int order, double x)> derivative;
};

enum class DerivativeSource { analytic, central_difference };

struct EulerMaclaurinOptions {
  // The formula is applied on [base, N]; f(1) + ... + f(base) is summed
  // directly into head_sum. A positive base is needed for f singular at 0.
  int base = 0;
  int gauss_nodes = 64;
  double fd_step = 1e-4;
  CombinatoricsLimits limits{};
};

struct EulerMaclaurinResult {
  double head_sum = 0.0;
  double integral_term = 0.0;
  // (f(N) - f(base)) / 2
  double endpoint_term = 0.0;
  // B_2m/(2m)! (f^(2m-1)(N) - f^(2m-1)(base)), m = 1..M
  std::vector<double> correction_terms;
  // head_sum + integral_term + endpoint_term + sum(correction_terms)
  double total = 0.0;
  double reference_sum = 0.0;
  DerivativeSource derivative_source = DerivativeSource::analytic;
};

/// Approximates f(1) + ... + f(N) by the Euler-Maclaurin formula of order M.
/// The integral is done by Gauss-Legendre on [base, N].
EulerMaclaurinResult euler_maclaurin_sum(const SmoothFunction& f, int N, int M,
                                         const EulerMaclaurinOptions& options = {});

struct ExactEulerMaclaurinResult {
  Rational integral_term;
  Rational endpoint_term;
  std::vector<Rational> correction_terms;
  Rational total;
  Rational reference_sum;
};

// Same formula on [0, N] with every term exact, for polynomial f.
ExactEulerMaclaurinResult euler_maclaurin_sum(const RationalPolynomial& f, int N, int M,
                                              const CombinatoricsLimits& limits = {});

// k-th derivative by the O(h^2) central difference
// h^-k sum_j (-1)^j C(k,j) f(x + (k/2 - j) h).
double central_difference(const std::function<double(double)>& f, int order, double x,
                          double h);

}  // namespace fbridge
