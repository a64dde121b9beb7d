#include "fbridge/analytic_bernoulli.hpp"

#include <cmath>
#include <numbers>

#include "fbridge/errors.hpp"
#include "fbridge/gamma.hpp"
#include "fbridge/zeta.hpp"

namespace fbridge {

AnalyticBernoulliValue analytic_bernoulli(Complex s, double x) {
  if (!(x > 0.0)) throw DomainError("analytic_bernoulli: x must be positive");
  AnalyticBernoulliValue out;
  out.s = s;
  out.x = x;
  out.route = BernoulliRoute::hurwitz;
  if (std::abs(s) < 1e-6) {
    // zeta(1-s, x) = 1/(-s) + O(1), so -s zeta(1-s, x) -> 1.
    out.value = 1.0;
    return out;
  }
  out.value = -s * hurwitz_zeta(1.0 - s, x).value;
  return out;
}

AnalyticBernoulliValue fourier_bernoulli(double s, double x, int N, FourierNormalization normalization) {
  using std::numbers::pi;
  if (!(s > 1.0)) throw DivergenceError("fourier_bernoulli: series needs s > 1");
  if (N < 10) throw DomainError("fourier_bernoulli: need N >= 10");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("fourier_bernoulli: x must lie in (0, 1)");

  // Sum from the small terms up.
  double sum = 0.0;
  for (int n = N; n >= 1; --n) {
    sum += std::pow(2.0 * pi * n, -s) * std::cos(2.0 * pi * n * x - pi * s / 2.0);
  }
  const double g = gamma(Complex(s + 1.0)).real();
  double value = -2.0 * g * sum;
  double tail = 2.0 * g * std::pow(2.0 * pi, -s) * std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
  if (normalization == FourierNormalization::displayed) {
    const double factor = -std::pow(2.0 * pi, -s);
    value *= factor;
    tail *= std::abs(factor);
  }

  AnalyticBernoulliValue out;
  out.s = s;
  out.x = x;
  out.value = value;
  out.route = BernoulliRoute::fourier;
  out.tail_bound = tail;
  return out;
}

}  // namespace fbridge
