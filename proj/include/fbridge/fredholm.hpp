#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fbridge/linalg.hpp"
#include "fbridge/quadrature.hpp"
#include "fbridge/selector.hpp"

namespace fbridge {

enum class KernelKind { min_xy, green_dirichlet_dirichlet, sine, selector, rank_one, custom };

const char* to_string(KernelKind kind);

// Tagged kernel description. Build through the factories below.
struct KernelSpec {
  KernelKind kind = KernelKind::min_xy;
  Interval domain{0.0, 1.0};
  bool symmetric = true;
  // Kernel has a derivative jump on the diagonal (min, Green, custom on request).
  bool kinked = false;

  double bandwidth = 0.0;            // sine
  SelectorParams selector{};         // selector, on [-pi, pi] with dtheta/(2 pi)
  std::function<double(double)> u;   // rank_one: alpha u(x) v(y)
  std::function<double(double)> v;
  double alpha = 1.0;
  std::function<double(double, double)> function;  // custom

  static KernelSpec min_xy();
  // Green function of -d^2/dx^2 on (0,1) with Dirichlet ends: min(x,y)(1 - max(x,y)).
  static KernelSpec green_dirichlet_dirichlet();
  // sin(s(x-y))/(pi(x-y)), by default on (-1, 1).
  static KernelSpec sine(double s, Interval domain = {-1.0, 1.0});
  static KernelSpec selector_kernel(int J, SelectorVariant variant);
  // An empty v means v = u, which makes the kernel symmetric.
  static KernelSpec rank_one(std::function<double(double)> u, std::function<double(double)> v,
                             double alpha, Interval domain = {0.0, 1.0});
  static KernelSpec custom(std::function<double(double, double)> k, Interval domain,
                           bool symmetric, bool kinked = false);

  bool is_complex() const;
  // Real kernels only.
  double operator()(double x, double y) const;
  Complex complex_value(double x, double y) const;
};

// automatic: Galerkin for kinked kernels, Nystrom otherwise.
enum class Discretization { automatic, nystrom, galerkin };

/// Discretized operator. For Nystrom, matrix(i,j) = sqrt(w_i) K(x_i,x_j) sqrt(w_j).
/// For Galerkin, matrix is the kernel in an orthonormal shifted-Legendre basis,
/// computed with quadrature split along the diagonal so the kink is
/// integrated exactly. Plain truncation loses Tr T - Tr G and similar tails,
/// which decay only algebraically for kinked kernels; trace_tail carries the
/// first two so determinants can add them back.
struct NystromSystem {
  KernelSpec kernel;
  Discretization discretization = Discretization::nystrom;
  QuadratureRule rule;
  RealMatrix matrix;
  ComplexMatrix complex_matrix;  // selector kernels only
  bool is_complex = false;
  bool symmetric = true;
  // Tr T - Tr G and Tr T^2 - Tr G^2; zero for Nystrom.
  double trace_tail[2] = {0.0, 0.0};
  // Galerkin only: basis values p_k(x_i) and (K p_k)(x_i) on the rule nodes.
  RealMatrix basis_at_nodes;
  RealMatrix kernel_basis_at_nodes;

  std::size_t size() const { return is_complex ? complex_matrix.rows() : matrix.rows(); }
  Complex matrix_trace() const;
  // Trace of the continuous operator as far as the system can tell.
  Complex corrected_trace() const { return matrix_trace() + trace_tail[0]; }
};

NystromSystem build_nystrom(const KernelSpec& kernel, int n_nodes,
                            Discretization discretization = Discretization::automatic);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending by magnitude
};

Spectrum eigenvalues_sym(const NystromSystem& system);

enum class Sign { plus, minus };
enum class Route { lu, eigenproduct, trace_series };

const char* to_string(Route route);

struct FredholmResult {
  Complex value = 1.0;
  double log_abs = 0.0;
  Complex phase = 1.0;
  Route route = Route::lu;
  std::optional<double> truncation_error_estimate;
  bool singular = false;
  int terms = 0;                  // trace_series only
  double spectral_radius = 0.0;   // trace_series only
};

/// det(I + lambda T) for Sign::plus, det(I - lambda T) for Sign::minus.
FredholmResult fredholm_det(const NystromSystem& system, double lambda, Sign sign, Route route);
FredholmResult fredholm_det(const KernelSpec& kernel, double lambda, int n_nodes, Sign sign,
                            Route route = Route::lu);

// ||A^16||_F^(1/16) by repeated squaring.
double spectral_radius_estimate(const NystromSystem& system);

struct ResolventSolution {
  std::vector<double> nodes;
  std::vector<double> f;
  std::vector<double> g;
  Complex determinant = 1.0;
  bool singular = false;
  bool solvable = true;
  // |(I - lambda A) c - g| in the discrete system; for an unsolvable system
  // the size of the component of g along the null vector.
  double residual = 0.0;
};

/// Solves (I - lambda K) f = g. When |det| < 1e-10 the system is treated as
/// singular: f is the minimum-norm solution if g is orthogonal to the null
/// vector and solvable is cleared otherwise. Real symmetric kernels only.
ResolventSolution resolvent_solve(const KernelSpec& kernel, double lambda,
                                  const std::function<double(double)>& g, int n_nodes,
                                  Discretization discretization = Discretization::automatic);

}  // namespace fbridge
