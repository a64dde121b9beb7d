#include "fbridge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fbridge/errors.hpp"
#include "fbridge/gamma.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;

template <class T>
T pairwise(std::span<const T> v) {
  if (v.size() <= 8) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

bool is_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::round(z.real()); }

std::string describe(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << '(' << z.real() << ", " << z.imag() << ')';
  return out.str();
}

// (1/2 pi i) \oint_{|z|=r} F(z) dz for the entire-times-monomial integrand,
// with near-zero detection of e^z - 1 at the nodes.
Complex stirling_circle(int n, int t, const CircularContour& contour,
                        std::vector<std::string>& warnings) {
  const int count = contour.node_count;
  const double step = 2.0 * pi / count;
  std::vector<Complex> samples(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double theta = k * step;
    Complex z = std::polar(contour.radius, theta);
    if (std::abs(std::exp(z) - 1.0) < 1e-12) {
      theta += 0.5 * step;
      z = std::polar(contour.radius, theta);
      warnings.push_back("node " + std::to_string(k) + " hit a zero of e^z - 1; shifted by half a step");
    }
    // f(z) dz / (2 pi i) with dz = i z dtheta
    const Complex f = std::pow(std::exp(z) - 1.0, t) * std::pow(z, -n);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw NumericalError("analytic_stirling_kernel: non-finite integrand at node " +
                           std::to_string(k) + " z=" + describe(z));
    }
    samples[static_cast<std::size_t>(k)] = f;
  }
  return pairwise(std::span<const Complex>(samples)) / static_cast<double>(count);
}

// Keyhole around the cut of z^(-s-1): arc |z| = r plus both banks of
// (-inf, -r]. The bank contributions combine to
//   -(sin(pi s)/pi) \int_r^inf (e^-x - 1)^t x^(-s-1) dx
// and the constant part (-1)^t of (e^-x - 1)^t is integrated in closed form,
// leaving an exponentially decaying remainder.
Complex stirling_keyhole(Complex s, int t, const CircularContour& contour) {
  const double r = contour.radius;
  const int count = contour.node_count;

  const QuadratureRule arc = gauss_legendre(count, -pi, pi);
  std::vector<Complex> arc_samples(arc.size());
  for (std::size_t k = 0; k < arc.size(); ++k) {
    const double theta = arc.nodes[k];
    const Complex z = std::polar(r, theta);
    const Complex log_z(std::log(r), theta);
    const Complex f = std::pow(std::exp(z) - 1.0, t) * std::exp(-s * log_z);  // times z from dz
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw NumericalError("analytic_stirling_kernel: non-finite integrand on arc at theta=" +
                           std::to_string(theta));
    }
    arc_samples[k] = arc.weights[k] * f;
  }
  const Complex arc_part = pairwise(std::span<const Complex>(arc_samples)) / (2.0 * pi);

  const double sign_t = (t % 2 == 0) ? 1.0 : -1.0;
  Complex ray = sign_t * std::exp(-s * std::log(r)) / s;
  if (t > 0) {
    constexpr double kRayLength = 45.0;
    const QuadratureRule rule = gauss_legendre(count, r, r + kRayLength);
    std::vector<Complex> ray_samples(rule.size());
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double x = rule.nodes[k];
      const double body = std::pow(std::expm1(-x), t) - sign_t;
      ray_samples[k] = rule.weights[k] * body * std::exp(-(s + 1.0) * std::log(x));
    }
    ray += pairwise(std::span<const Complex>(ray_samples));
  }
  return arc_part - std::sin(pi * s) / pi * ray;
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) { return pairwise(values); }
double pairwise_sum(std::span<const double> values) { return pairwise(values); }

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  if (!(a < b)) throw DomainError("gauss_legendre: need a < b");
  constexpr int kMaxIterations = 100;

  std::vector<double> t(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("gauss_legendre: Newton iteration did not converge");
    // Refresh the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double weight = 2.0 / ((1.0 - x * x) * dp * dp);
    t[static_cast<std::size_t>(i)] = -x;
    t[static_cast<std::size_t>(n - 1 - i)] = x;
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
  if (n % 2 == 1) t[static_cast<std::size_t>(n / 2)] = 0.0;

  QuadratureRule rule;
  rule.domain = {a, b};
  const double mid = 0.5 * (a + b);
  const double half_len = 0.5 * (b - a);
  rule.nodes.resize(t.size());
  rule.weights.resize(w.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    rule.nodes[i] = mid + half_len * t[i];
    rule.weights[i] = half_len * w[i];
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) throw DomainError("periodic_trapezoid: need n >= 1");
  QuadratureRule rule;
  rule.domain = {-pi, pi};
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
  for (int i = 0; i < n; ++i) rule.nodes[static_cast<std::size_t>(i)] = -pi + (i + 0.5) * 2.0 * pi / n;
  return rule;
}

void CircularContour::validate() const {
  if (!(radius > 0.0) || !(radius < 2.0 * pi)) {
    throw DomainError("CircularContour: radius must lie in (0, 2 pi)");
  }
  if (node_count <= 0 || node_count % 2 != 0) {
    throw DomainError("CircularContour: node_count must be positive and even");
  }
}

Complex contour_integral(const std::function<Complex(Complex)>& integrand,
                         const CircularContour& contour) {
  if (!(contour.radius > 0.0) || contour.node_count <= 0) {
    throw DomainError("contour_integral: invalid contour");
  }
  const int count = contour.node_count;
  std::vector<Complex> samples(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const Complex z = std::polar(contour.radius, 2.0 * pi * k / count);
    const Complex f = integrand(z);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw NumericalError("contour_integral: non-finite integrand at node " + std::to_string(k) +
                           " z=" + describe(z));
    }
    samples[static_cast<std::size_t>(k)] = f * z;
  }
  return pairwise(std::span<const Complex>(samples)) / static_cast<double>(count);
}

double default_stirling_radius(double s, int t) {
  constexpr double lo = 0.5;
  constexpr double hi = 6.0;
  // Stationary point of t log(e^r - 1) - s log r, i.e. t e^r/(e^r - 1) = s/r.
  auto slope = [&](double r) { return t * std::exp(r) / std::expm1(r) - s / r; };
  if (slope(lo) >= 0.0) return lo;
  if (slope(hi) <= 0.0) return hi;
  double a = lo;
  double b = hi;
  for (int i = 0; i < 60; ++i) {
    const double m = 0.5 * (a + b);
    (slope(m) < 0.0 ? a : b) = m;
  }
  return 0.5 * (a + b);
}

ContourResult analytic_stirling_kernel(Complex s, int t, std::optional<CircularContour> contour) {
  if (t < 0) throw UnsupportedParameter("analytic_stirling_kernel: t must be a nonnegative integer");
  const CircularContour path =
      contour.value_or(CircularContour{default_stirling_radius(s.real(), t), 256});
  path.validate();

  ContourResult result;
  const Complex prefactor = std::exp(log_gamma(s + 1.0) - log_gamma(Complex(t + 1.0)));
  if (is_integer(s)) {
    const int n = static_cast<int>(std::lround(s.real()));
    if (n < 0) throw DomainError("analytic_stirling_kernel: Gamma(s+1) has a pole at negative integer s");
    // (1/2 pi i) \oint (e^z-1)^t z^(-n-1) dz; the trapezoid sum supplies the factor z.
    result.value = prefactor * stirling_circle(n, t, path, result.warnings);
  } else {
    result.value = prefactor * stirling_keyhole(s, t, path);
  }
  return result;
}

}  // namespace fbridge
