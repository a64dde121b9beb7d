#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fbridge/linalg.hpp"
#include "fbridge/quadrature.hpp"

namespace fbridge {

// complex_sum: (1/J) sum_{m<J} e^{i(2m+1)D/2} with D = theta - phi.
// real_part: its real part, sin(J D)/(2J sin(D/2)).
// paper_closed_form: sin(J D/2) cos(D/2)/(J sin(D/2)).
enum class SelectorVariant { complex_sum, real_part, paper_closed_form };

const char* to_string(SelectorVariant variant);

struct SelectorParams {
  int J = 1;
  SelectorVariant variant = SelectorVariant::complex_sum;
};

// Kernel value as a function of D alone. Any real D is accepted; the modes
// are half-integer so the period is 4 pi.
Complex selector_value_delta(const SelectorParams& params, double delta);

// Angles outside [-pi, pi] are clamped and a warning is appended if a sink is given.
Complex selector_value(const SelectorParams& params, double theta, double phi,
                       std::vector<std::string>* warnings = nullptr);

// n x n matrix S(theta_i, theta_j) / n on the periodic midpoint grid, i.e. the
// Nystrom matrix for the measure dphi/(2 pi).
ComplexMatrix selector_matrix(const SelectorParams& params, int node_count);

// Eigenvalues of the Nystrom matrix, largest magnitude first.
std::vector<double> selector_spectrum(int J, SelectorVariant variant, int node_count);

// det(I - lambda S_J) from the known spectrum: (1 - lambda/J)^J for
// complex_sum, (1 - lambda/(2J))^(2J) for real_part. The boxed closed form has no
// closed spectrum here and goes through the Nystrom spectrum.
double selector_determinant(int J, double lambda, SelectorVariant variant);

// Same determinant by LU of I - lambda * selector_matrix.
Complex selector_determinant_lu(int J, double lambda, SelectorVariant variant, int node_count);

// Integral of S(theta, theta) dtheta/(2 pi) on the periodic grid.
double selector_trace(int J, SelectorVariant variant, int node_count);

struct CompositionReport {
  // max |S o S - S|, max |S o S - S/J|, max |P o P - P| with P = J S.
  double idempotent_deviation = 0.0;
  double scaled_deviation = 0.0;
  double projector_deviation = 0.0;
  double peak = 0.0;  // max |S|, for scale
};

CompositionReport composition_diagnostic(int J, int node_count);

struct SineRelationReport {
  // max |S_boxed J/(2 pi cos(D/2)) - sin(J D/2)/(2 pi sin(D/2))|
  double relation_deviation = 0.0;
  // max |e^{i theta} - 1 - 2i e^{i theta/2} sin(theta/2)| over the grid angles
  double angle_identity_deviation = 0.0;
};

SineRelationReport sine_kernel_relation(int J, const std::vector<std::pair<double, double>>& grid);

// count x count pairs on [-pi, pi]^2 avoiding |D| = pi, where cos(D/2) vanishes.
std::vector<std::pair<double, double>> default_relation_grid(int count);

// |e^{i theta} - 1 - 2i e^{i theta/2} sin(theta/2)|
double angle_identity_deviation(double theta);

}  // namespace fbridge
