#include "fbridge/euler_maclaurin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fbridge/errors.hpp"
#include "fbridge/quadrature.hpp"

namespace fbridge {
namespace {

void check_order(int M, const CombinatoricsLimits& limits) {
  if (M < 0) throw DomainError("euler_maclaurin_sum: negative correction order");
  if (2 * M > limits.bernoulli_cap) {
    throw SizeError("euler_maclaurin_sum: order " + std::to_string(M) +
                    " needs B_" + std::to_string(2 * M) + " beyond the cap");
  }
}

}  // namespace

double central_difference(const std::function<double(double)>& f, int order, double x,
                          double h) {
  if (order < 0) throw DomainError("central_difference: negative order");
  if (order == 0) return f(x);
  double acc = 0.0;
  double c = 1.0;  // C(order, j), built incrementally
  for (int j = 0; j <= order; ++j) {
    const double offset = (0.5 * order - j) * h;
    acc += ((j % 2 == 0) ? c : -c) * f(x + offset);
    c = c * (order - j) / (j + 1);
  }
  return acc / std::pow(h, order);
}

EulerMaclaurinResult euler_maclaurin_sum(const SmoothFunction& f, int N, int M,
                                         const EulerMaclaurinOptions& options) {
  if (!f.value) throw DomainError("euler_maclaurin_sum: missing function");
  if (N < 1) throw DomainError("euler_maclaurin_sum: need N >= 1");
  if (options.base < 0 || options.base > N) {
    throw DomainError("euler_maclaurin_sum: base must lie in [0, N]");
  }
  check_order(M, options.limits);

  EulerMaclaurinResult result;
  const double a = options.base;
  const double b = N;
  for (int k = 1; k <= options.base; ++k) result.head_sum += f.value(k);

  if (b > a) {
    result.integral_term = gauss_legendre(options.gauss_nodes, a, b).integrate(f.value);
  }
  result.endpoint_term = 0.5 * (f.value(b) - f.value(a));

  std::function<double(int, double)> derivative = f.derivative;
  if (!derivative) {
    result.derivative_source = DerivativeSource::central_difference;
    derivative = [&f, step = options.fd_step](int order, double x) {
      // Higher orders divide by h^order, so widen the step to keep rounding
      // error in check.
      const double eps = std::numeric_limits<double>::epsilon();
      const double h = std::max(step, std::pow(eps, 1.0 / (order + 2)));
      return central_difference(f.value, order, x, h);
    };
  }
  for (int m = 1; m <= M; ++m) {
    const Rational coeff = bernoulli_number(2 * m, options.limits) /
                           Rational(factorial(static_cast<unsigned>(2 * m)));
    const double jump = derivative(2 * m - 1, b) - derivative(2 * m - 1, a);
    result.correction_terms.push_back(coeff.to_double() * jump);
  }

  result.total = result.head_sum + result.integral_term + result.endpoint_term;
  for (double term : result.correction_terms) result.total += term;
  for (int k = 1; k <= N; ++k) result.reference_sum += f.value(k);
  return result;
}

ExactEulerMaclaurinResult euler_maclaurin_sum(const RationalPolynomial& f, int N, int M,
                                              const CombinatoricsLimits& limits) {
  if (N < 1) throw DomainError("euler_maclaurin_sum: need N >= 1");
  check_order(M, limits);
  const Rational upper(static_cast<long>(N));
  const Rational lower(0);

  ExactEulerMaclaurinResult result;
  const RationalPolynomial F = f.antiderivative();
  result.integral_term = F(upper) - F(lower);
  result.endpoint_term = (f(upper) - f(lower)) / Rational(2);

  RationalPolynomial d = f.derivative();  // f^(2m-1), starting at m = 1
  for (int m = 1; m <= M; ++m) {
    const Rational coeff = bernoulli_number(2 * m, limits) /
                           Rational(factorial(static_cast<unsigned>(2 * m)));
    result.correction_terms.push_back(coeff * (d(upper) - d(lower)));
    d = d.derivative().derivative();
  }

  result.total = result.integral_term + result.endpoint_term;
  for (const Rational& term : result.correction_terms) result.total += term;
  for (int k = 1; k <= N; ++k) result.reference_sum += f(Rational(static_cast<long>(k)));
  return result;
}

}  // namespace fbridge
