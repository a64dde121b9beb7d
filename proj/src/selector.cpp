#include "fbridge/selector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbridge/errors.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;
constexpr double kFallback = 1e-8;

void check_J(int J) {
  if (J < 1) throw DomainError("selector: J must be >= 1");
}

void check_nodes(int J, int node_count) {
  if (node_count < 8 * J) {
    throw ResolutionError("selector: node_count " + std::to_string(node_count) +
                          " below 8J = " + std::to_string(8 * J));
  }
}

Complex explicit_sum(int J, double delta) {
  Complex acc = 0.0;
  for (int m = 0; m < J; ++m) acc += std::polar(1.0, (2 * m + 1) * delta / 2.0);
  return acc / static_cast<double>(J);
}

// sin(J D/2)/(J sin(D/2)), the Dirichlet-type ratio shared by the closed forms.
double dirichlet_ratio(int J, double delta) {
  return std::sin(J * delta / 2.0) / (J * std::sin(delta / 2.0));
}

}  // namespace

const char* to_string(SelectorVariant variant) {
  switch (variant) {
    case SelectorVariant::complex_sum: return "complex_sum";
    case SelectorVariant::real_part: return "real_part";
    case SelectorVariant::paper_closed_form: return "paper_closed_form";
  }
  return "unknown";
}

Complex selector_value_delta(const SelectorParams& params, double delta) {
  check_J(params.J);
  const int J = params.J;
  const bool near = std::abs(std::sin(delta / 2.0)) < kFallback;
  switch (params.variant) {
    case SelectorVariant::complex_sum:
      if (near) return explicit_sum(J, delta);
      return std::polar(1.0, J * delta / 2.0) * dirichlet_ratio(J, delta);
    case SelectorVariant::real_part:
      if (near) return explicit_sum(J, delta).real();
      return std::sin(J * delta) / (2.0 * J * std::sin(delta / 2.0));
    case SelectorVariant::paper_closed_form: {
      if (near) {
        // sin(JD/2)/sin(D/2) = sum_m cos((2m+1-J) D/2)
        double acc = 0.0;
        for (int m = 0; m < J; ++m) acc += std::cos((2 * m + 1 - J) * delta / 2.0);
        return acc / J * std::cos(delta / 2.0);
      }
      return dirichlet_ratio(J, delta) * std::cos(delta / 2.0);
    }
  }
  return 0.0;
}

Complex selector_value(const SelectorParams& params, double theta, double phi,
                       std::vector<std::string>* warnings) {
  auto clamp = [&](double x, const char* name) {
    if (x < -pi || x > pi) {
      if (warnings) warnings->push_back(std::string(name) + " clamped to [-pi, pi]");
      return std::clamp(x, -pi, pi);
    }
    return x;
  };
  return selector_value_delta(params, clamp(theta, "theta") - clamp(phi, "phi"));
}

ComplexMatrix selector_matrix(const SelectorParams& params, int node_count) {
  check_J(params.J);
  if (node_count < 1) throw DomainError("selector_matrix: need node_count >= 1");
  const QuadratureRule rule = periodic_trapezoid(node_count);
  const std::size_t n = rule.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = rule.weights[j] * selector_value_delta(params, rule.nodes[i] - rule.nodes[j]);
    }
  }
  return m;
}

std::vector<double> selector_spectrum(int J, SelectorVariant variant, int node_count) {
  check_J(J);
  check_nodes(J, node_count);
  const ComplexMatrix m = selector_matrix({J, variant}, node_count);
  if (variant == SelectorVariant::complex_sum) return hermitian_eigenvalues(m);
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).real();
  }
  return jacobi_eigen(std::move(r)).values;
}

double selector_determinant(int J, double lambda, SelectorVariant variant) {
  check_J(J);
  switch (variant) {
    case SelectorVariant::complex_sum: return std::pow(1.0 - lambda / J, J);
    case SelectorVariant::real_part: return std::pow(1.0 - lambda / (2.0 * J), 2 * J);
    case SelectorVariant::paper_closed_form: {
      double det = 1.0;
      for (double mu : selector_spectrum(J, variant, std::max(8 * J, 32))) det *= 1.0 - lambda * mu;
      return det;
    }
  }
  return 0.0;
}

Complex selector_determinant_lu(int J, double lambda, SelectorVariant variant, int node_count) {
  check_J(J);
  check_nodes(J, node_count);
  ComplexMatrix m = selector_matrix({J, variant}, node_count);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= -lambda;
    m(i, i) += 1.0;
  }
  return lu_decompose(std::move(m)).determinant();
}

double selector_trace(int J, SelectorVariant variant, int node_count) {
  check_J(J);
  const QuadratureRule rule = periodic_trapezoid(node_count);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    acc += rule.weights[i] * selector_value({J, variant}, rule.nodes[i], rule.nodes[i]).real();
  }
  return acc;
}

CompositionReport composition_diagnostic(int J, int node_count) {
  check_J(J);
  check_nodes(J, node_count);
  const SelectorParams params{J, SelectorVariant::complex_sum};
  const QuadratureRule rule = periodic_trapezoid(node_count);
  const std::size_t n = rule.size();
  ComplexMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s(i, j) = selector_value_delta(params, rule.nodes[i] - rule.nodes[j]);
  }
  // (S o S)(theta_i, theta_k) = sum_j S(i, j) S(j, k) / n
  ComplexMatrix c = multiply(s, s);
  for (auto& x : c.data()) x /= static_cast<double>(n);

  CompositionReport report;
  for (std::size_t k = 0; k < s.data().size(); ++k) {
    const Complex sk = s.data()[k];
    const Complex ck = c.data()[k];
    report.peak = std::max(report.peak, std::abs(sk));
    report.idempotent_deviation = std::max(report.idempotent_deviation, std::abs(ck - sk));
    report.scaled_deviation = std::max(report.scaled_deviation, std::abs(ck - sk / static_cast<double>(J)));
    const double JJ = static_cast<double>(J) * J;
    report.projector_deviation = std::max(report.projector_deviation, std::abs(JJ * ck - static_cast<double>(J) * sk));
  }
  return report;
}

double angle_identity_deviation(double theta) {
  const Complex lhs = std::polar(1.0, theta) - 1.0;
  const Complex rhs = Complex(0.0, 2.0) * std::polar(1.0, theta / 2.0) * std::sin(theta / 2.0);
  return std::abs(lhs - rhs);
}

SineRelationReport sine_kernel_relation(int J, const std::vector<std::pair<double, double>>& grid) {
  check_J(J);
  const SelectorParams params{J, SelectorVariant::paper_closed_form};
  SineRelationReport report;
  for (const auto& [theta, phi] : grid) {
    const double delta = theta - phi;
    const double c = std::cos(delta / 2.0);
    if (std::abs(c) < 1e-6) throw DomainError("sine_kernel_relation: grid point with cos(D/2) = 0");
    const double lhs = selector_value(params, theta, phi).real() * J / (2.0 * pi * c);
    const double half = std::sin(delta / 2.0);
    double sine;
    if (std::abs(half) < kFallback) {
      double acc = 0.0;
      for (int m = 0; m < J; ++m) acc += std::cos((2 * m + 1 - J) * delta / 2.0);
      sine = acc / (2.0 * pi);
    } else {
      sine = std::sin(J * delta / 2.0) / (2.0 * pi * half);
    }
    report.relation_deviation = std::max(report.relation_deviation, std::abs(lhs - sine));
    report.angle_identity_deviation =
        std::max({report.angle_identity_deviation, angle_identity_deviation(theta), angle_identity_deviation(phi)});
  }
  return report;
}

std::vector<std::pair<double, double>> default_relation_grid(int count) {
  if (count < 1) throw DomainError("default_relation_grid: need count >= 1");
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const double theta = -pi + (i + 0.5) * 2.0 * pi / count;
      const double phi = -pi + (j + 0.5) * 2.0 * pi / count;
      if (std::abs(std::cos((theta - phi) / 2.0)) < 1e-3) continue;
      grid.emplace_back(theta, phi);
    }
  }
  return grid;
}

}  // namespace fbridge
