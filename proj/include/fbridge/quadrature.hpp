#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fbridge {

using Complex = std::complex<double>;

struct Interval {
  double a = 0.0;
  double b = 1.0;
  double length() const { return b - a; }
};

// Nodes strictly increasing and interior to the domain; weights positive.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Interval domain;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss-Legendre rule with n nodes on (a, b). Roots of P_n are found by
/// Newton iteration from Chebyshev initial guesses; the rule integrates
/// polynomials of degree <= 2n-1 exactly.
QuadratureRule gauss_legendre(int n, double a, double b);

// n equispaced midpoint nodes on the circle [-pi, pi) with weights 1/n, which
// realizes the normalized measure dtheta/(2 pi).
QuadratureRule periodic_trapezoid(int n);

// Circle |z| = radius sampled at node_count equispaced angles.
struct CircularContour {
  double radius = 1.0;
  int node_count = 256;

  // Throws DomainError unless 0 < radius < 2 pi and node_count is even and positive.
  void validate() const;
};

/// (1/2 pi i) times the trapezoid sum of f(z) dz around the circle.
/// Node contributions are combined by pairwise summation, so the result does
/// not depend on evaluation order. A non-finite sample raises NumericalError
/// naming the offending node.
Complex contour_integral(const std::function<Complex(Complex)>& integrand,
                         const CircularContour& contour);

struct ContourResult {
  Complex value;
  std::vector<std::string> warnings;
};

/// Gamma(s+1)/Gamma(t+1) * (1/2 pi i) \oint (e^z - 1)^t / z^(s+1) dz.
///
/// t must be a nonnegative integer so that (e^z - 1)^t is entire. For integer
/// s the circle is used and the result is S(s, t). For any other s the circle
/// is opened into a keyhole around the principal-branch cut of z^(-s-1) along
/// the negative real axis (arc by Gauss-Legendre in the angle, cut by
/// Gauss-Legendre along the ray), which continues the Stirling numbers to
/// (1/t!) sum_j (-1)^(t-j) C(t,j) j^s.
///
/// Without an explicit contour a radius near the saddle point of the
/// integrand is chosen (clamped below 2 pi) with 256 nodes.
ContourResult analytic_stirling_kernel(Complex s, int t,
                                       std::optional<CircularContour> contour = std::nullopt);

// Radius used when analytic_stirling_kernel is called without a contour.
double default_stirling_radius(double s, int t);

// Order-independent summation used by the contour routines.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

}  // namespace fbridge
