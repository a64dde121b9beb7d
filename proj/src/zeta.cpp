#include "fbridge/zeta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fbridge/combinatorics.hpp"
#include "fbridge/errors.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;

// B_2m/(2m)! as doubles, m = 0..M.
double bernoulli_ratio(int m) {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    for (int k = 0; k <= 100; ++k) {
      t.push_back((bernoulli_number(2 * k) / Rational(factorial(static_cast<unsigned>(2 * k)))).to_double());
    }
    return t;
  }();
  if (m < 0 || m >= static_cast<int>(table.size())) {
    throw SizeError("zeta: correction order " + std::to_string(m) + " beyond the Bernoulli table");
  }
  return table[static_cast<std::size_t>(m)];
}

bool nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex power(double base, Complex exponent) { return std::exp(exponent * std::log(base)); }

}  // namespace

ZetaEvaluation hurwitz_zeta(Complex s, double x, const ZetaConfig& config) {
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta: x must be positive");
  if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (config.N_terms < 0 || config.M_corrections < 0) throw DomainError("hurwitz_zeta: negative term count");

  ZetaEvaluation out;
  out.s = s;
  out.M_corrections = config.M_corrections;
  int N = config.N_terms;
  int M = config.M_corrections;
  if (nonpositive_integer(s)) {
    // (s)_(2m-1) vanishes once 2m-1 > -s, so the expansion is exact at N = 0.
    N = 0;
    M = std::max(M, static_cast<int>(-s.real()) / 2 + 1);
  }
  out.N_terms = N;
  out.M_corrections = M;

  Complex head = 0.0;
  for (int k = 0; k < N; ++k) head += power(k + x, -s);
  const double base = N + x;
  Complex value = head + power(base, 1.0 - s) / (s - 1.0) + 0.5 * power(base, -s);

  Complex rising = s;  // (s)_(2m-1)
  Complex last = 0.0;
  for (int m = 1; m <= M; ++m) {
    if (m > 1) rising *= (s + (2.0 * m - 3.0)) * (s + (2.0 * m - 2.0));
    last = bernoulli_ratio(m) * rising * power(base, -s - (2.0 * m - 1.0));
    value += last;
  }
  out.value = value;
  out.error_heuristic = std::abs(last);
  return out;
}

ZetaEvaluation riemann_zeta(Complex s, const ZetaConfig& config) { return hurwitz_zeta(s, 1.0, config); }

double hurwitz_zeta_derivative(double s0, double x, double h) {
  if (s0 == 1.0) throw PoleError("zeta derivative: pole at s = 1");
  auto D = [&](double step) {
    return (hurwitz_zeta(s0 + step, x).value.real() - hurwitz_zeta(s0 - step, x).value.real()) / (2.0 * step);
  };
  return (4.0 * D(0.5 * h) - D(h)) / 3.0;
}

double zeta_derivative(double s0, double h) { return hurwitz_zeta_derivative(s0, 1.0, h); }

const char* to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::DD: return "DD";
    case BoundaryCondition::NN: return "NN";
    case BoundaryCondition::DN: return "DN";
    case BoundaryCondition::ND: return "ND";
  }
  return "unknown";
}

double det_zeta_laplacian(BoundaryCondition bc) {
  // zeta_L(s) = pi^(-2s) zeta(2s, x) with x = 1 or 1/2, so
  // zeta_L'(0) = -2 log(pi) zeta(0, x) + 2 zeta'(0, x).
  const double x = (bc == BoundaryCondition::DD || bc == BoundaryCondition::NN) ? 1.0 : 0.5;
  const double z0 = hurwitz_zeta(0.0, x).value.real();
  const double dz0 = hurwitz_zeta_derivative(0.0, x);
  const double derivative = -2.0 * std::log(pi) * z0 + 2.0 * dz0;
  return std::exp(-derivative);
}

double det_ratio(double lambda, BoundaryCondition bc) {
  const bool sine_type = bc == BoundaryCondition::DD || bc == BoundaryCondition::NN;
  if (std::abs(lambda) < 1e-6) {
    return sine_type ? 1.0 - lambda / 6.0 + lambda * lambda / 120.0
                     : 1.0 - lambda / 2.0 + lambda * lambda / 24.0;
  }
  if (lambda > 0.0) {
    const double r = std::sqrt(lambda);
    return sine_type ? std::sin(r) / r : std::cos(r);
  }
  const double r = std::sqrt(-lambda);
  return sine_type ? std::sinh(r) / r : std::cosh(r);
}

double zeta_even(int m) {
  if (m < 1 || m > 50) throw DomainError("zeta_even: need 1 <= m <= 50");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * bernoulli_ratio(m) * std::pow(2.0 * pi, 2 * m) / 2.0;
}

double LogSincSeries::evaluate(double x) const {
  double acc = 0.0;
  double x2m = 1.0;
  for (double c : coefficients) {
    x2m *= x * x;
    acc += c * x2m;
  }
  return acc;
}

LogSincSeries log_sinc_series(int M) {
  if (M < 1 || M > 50) throw DomainError("log_sinc_series: need 1 <= M <= 50");
  LogSincSeries out;
  for (int m = 1; m <= M; ++m) out.coefficients.push_back(-zeta_even(m) / (m * std::pow(pi, 2 * m)));
  for (int m = 0; m <= M; ++m) {
    const Rational taylor = Rational(m % 2 == 0 ? 1 : -1) /
                            Rational(factorial(static_cast<unsigned>(2 * m + 1)));
    const Rational claim = bernoulli_number(2 * m) / Rational(factorial(static_cast<unsigned>(2 * m)));
    out.sinc_taylor.push_back(taylor);
    out.bernoulli_claim.push_back(claim);
    if (m >= 1 && out.first_mismatch == 0 && !(taylor == claim)) out.first_mismatch = m;
  }
  return out;
}

GlaisherReport glaisher_constant() {
  GlaisherReport r;
  r.zeta_prime_minus_one = zeta_derivative(-1.0);
  r.A = std::exp(1.0 / 12.0 - r.zeta_prime_minus_one);
  r.displayed_deviation = std::abs(r.A - r.displayed_value);
  r.alternative_formula_residual =
      std::abs(r.zeta_prime_minus_one + std::log(2.0 * pi) / 12.0 - std::log(r.A));
  return r;
}

}  // namespace fbridge
