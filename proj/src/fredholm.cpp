#include "fbridge/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fbridge/errors.hpp"

namespace fbridge {
namespace {

using std::numbers::pi;

std::string location(double x, double y) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << x << ", " << y << ")";
  return out.str();
}

// Orthonormal shifted Legendre polynomials p_0..p_{n-1} on [a, b] at x.
void legendre_basis(double x, const Interval& domain, std::vector<double>& out) {
  const std::size_t n = out.size();
  const double L = domain.length();
  const double t = (2.0 * x - domain.a - domain.b) / L;
  double p0 = 1.0;
  double p1 = t;
  for (std::size_t k = 0; k < n; ++k) {
    double pk;
    if (k == 0) {
      pk = p0;
    } else if (k == 1) {
      pk = p1;
    } else {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
      pk = p2;
    }
    out[k] = std::sqrt((2.0 * k + 1.0) / L) * pk;
  }
}

Discretization resolve(const KernelSpec& kernel, Discretization d) {
  if (d != Discretization::automatic) return d;
  return kernel.kinked ? Discretization::galerkin : Discretization::nystrom;
}

void check_finite(double value, double x, double y) {
  if (!std::isfinite(value)) throw NumericalError("kernel evaluation non-finite at " + location(x, y));
}

NystromSystem build_selector(const KernelSpec& kernel, int n_nodes) {
  NystromSystem system;
  system.kernel = kernel;
  system.discretization = Discretization::nystrom;
  system.rule = periodic_trapezoid(n_nodes);
  system.symmetric = true;
  const ComplexMatrix m = selector_matrix(kernel.selector, n_nodes);
  if (kernel.is_complex()) {
    system.is_complex = true;
    system.complex_matrix = m;
  } else {
    system.matrix = RealMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) system.matrix(i, j) = m(i, j).real();
    }
  }
  return system;
}

NystromSystem build_plain(const KernelSpec& kernel, int n_nodes) {
  NystromSystem system;
  system.kernel = kernel;
  system.discretization = Discretization::nystrom;
  system.symmetric = kernel.symmetric;
  system.rule = gauss_legendre(n_nodes, kernel.domain.a, kernel.domain.b);
  const std::size_t n = system.rule.size();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(system.rule.weights[i]);
  system.matrix = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = system.rule.nodes[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double y = system.rule.nodes[j];
      const double k = kernel(x, y);
      check_finite(k, x, y);
      system.matrix(i, j) = root[i] * k * root[j];
    }
  }
  return system;
}

NystromSystem build_galerkin(const KernelSpec& kernel, int n_basis) {
  NystromSystem system;
  system.kernel = kernel;
  system.discretization = Discretization::galerkin;
  system.symmetric = kernel.symmetric;
  const Interval dom = kernel.domain;
  const std::size_t n = static_cast<std::size_t>(n_basis);
  const int m = n_basis + 2;
  system.rule = gauss_legendre(m, dom.a, dom.b);
  const QuadratureRule unit = gauss_legendre(m, -1.0, 1.0);

  system.matrix = RealMatrix(n, n);
  system.basis_at_nodes = RealMatrix(static_cast<std::size_t>(m), n);
  system.kernel_basis_at_nodes = RealMatrix(static_cast<std::size_t>(m), n);
  std::vector<double> px(n);
  std::vector<double> py(n);
  std::vector<double> v(n);
  double trace_t = 0.0;
  double trace_t2 = 0.0;

  for (int i = 0; i < m; ++i) {
    const double x = system.rule.nodes[static_cast<std::size_t>(i)];
    const double wx = system.rule.weights[static_cast<std::size_t>(i)];
    legendre_basis(x, dom, px);
    std::fill(v.begin(), v.end(), 0.0);
    double k2 = 0.0;
    // Inner integral split at y = x so each piece is smooth.
    for (int side = 0; side < 2; ++side) {
      const double lo = side == 0 ? dom.a : x;
      const double hi = side == 0 ? x : dom.b;
      const double half = 0.5 * (hi - lo);
      if (half <= 0.0) continue;
      for (std::size_t q = 0; q < unit.size(); ++q) {
        const double y = lo + half * (unit.nodes[q] + 1.0);
        const double wy = half * unit.weights[q];
        const double k = kernel(x, y);
        check_finite(k, x, y);
        k2 += wy * k * k;
        legendre_basis(y, dom, py);
        const double wk = wy * k;
        for (std::size_t l = 0; l < n; ++l) v[l] += wk * py[l];
      }
    }
    const double kxx = kernel(x, x);
    check_finite(kxx, x, x);
    trace_t += wx * kxx;
    trace_t2 += wx * k2;
    for (std::size_t k = 0; k < n; ++k) {
      system.basis_at_nodes(static_cast<std::size_t>(i), k) = px[k];
      system.kernel_basis_at_nodes(static_cast<std::size_t>(i), k) = v[k];
      const double a = wx * px[k];
      double* row = system.matrix.row(k);
      for (std::size_t l = 0; l < n; ++l) row[l] += a * v[l];
    }
  }
  if (kernel.symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double s = 0.5 * (system.matrix(i, j) + system.matrix(j, i));
        system.matrix(i, j) = system.matrix(j, i) = s;
      }
    }
  }
  const double norm = frobenius_norm(system.matrix);
  system.trace_tail[0] = trace_t - trace(system.matrix);
  system.trace_tail[1] = kernel.symmetric ? trace_t2 - norm * norm : 0.0;
  return system;
}

template <class T>
double radius_of(Matrix<T> b) {
  double log_scale = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double nb = frobenius_norm(b);
    if (nb == 0.0) return 0.0;
    for (auto& x : b.data()) x /= nb;
    log_scale = 2.0 * (log_scale + std::log(nb));
    b = multiply(b, b);
  }
  const double nb = frobenius_norm(b);
  if (nb == 0.0) return 0.0;
  return std::exp((log_scale + std::log(nb)) / 16.0);
}

template <class T>
FredholmResult lu_route(const Matrix<T>& a, double mu) {
  Matrix<T> m = a;
  for (auto& x : m.data()) x *= mu;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += T{1};
  const LUDecomposition<T> lu = lu_decompose(std::move(m));
  FredholmResult r;
  r.route = Route::lu;
  r.singular = lu.singular;
  r.log_abs = lu.log_abs_det;
  r.phase = Complex(lu.phase);
  return r;
}

template <class T>
FredholmResult trace_route(const Matrix<T>& a, double mu, double rho, const double tail[2]) {
  const double q = std::abs(mu) * rho;
  if (q >= 0.9) {
    throw DivergenceError("fredholm_det: trace series needs |lambda| rho < 0.9, got " + std::to_string(q));
  }
  constexpr int kMaxTerms = 60;
  const double frob = frobenius_norm(a);
  auto bound = [&](int N) {
    if (rho == 0.0) return 0.0;
    return frob * frob / (rho * rho) * std::pow(q, N + 1) / ((N + 1) * (1.0 - q));
  };
  int N = 1;
  while (N < kMaxTerms && bound(N) > 1e-17) ++N;

  Complex exponent = 0.0;
  Matrix<T> power = a;
  double mu_k = 1.0;
  for (int k = 1; k <= N; ++k) {
    mu_k *= mu;
    Complex tr = Complex(trace(power));
    if (k <= 2) tr += tail[k - 1];
    exponent += ((k % 2 == 1) ? 1.0 : -1.0) * mu_k * tr / static_cast<double>(k);
    if (k < N) power = multiply(power, a);
  }
  FredholmResult r;
  r.route = Route::trace_series;
  r.terms = N;
  r.spectral_radius = rho;
  r.truncation_error_estimate = bound(N);
  r.log_abs = exponent.real();
  r.phase = std::polar(1.0, exponent.imag());
  // The tails are already inside the exponent.
  return r;
}

}  // namespace

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::min_xy: return "min_xy";
    case KernelKind::green_dirichlet_dirichlet: return "green_dirichlet_dirichlet";
    case KernelKind::sine: return "sine";
    case KernelKind::selector: return "selector";
    case KernelKind::rank_one: return "rank_one";
    case KernelKind::custom: return "custom";
  }
  return "unknown";
}

const char* to_string(Route route) {
  switch (route) {
    case Route::lu: return "lu";
    case Route::eigenproduct: return "eigenproduct";
    case Route::trace_series: return "trace_series";
  }
  return "unknown";
}

KernelSpec KernelSpec::min_xy() {
  KernelSpec k;
  k.kind = KernelKind::min_xy;
  k.kinked = true;
  return k;
}

KernelSpec KernelSpec::green_dirichlet_dirichlet() {
  KernelSpec k;
  k.kind = KernelKind::green_dirichlet_dirichlet;
  k.kinked = true;
  return k;
}

KernelSpec KernelSpec::sine(double s, Interval domain) {
  if (!(s > 0.0)) throw DomainError("sine kernel: bandwidth must be positive");
  if (!(domain.a < domain.b)) throw DomainError("sine kernel: empty domain");
  KernelSpec k;
  k.kind = KernelKind::sine;
  k.bandwidth = s;
  k.domain = domain;
  return k;
}

KernelSpec KernelSpec::selector_kernel(int J, SelectorVariant variant) {
  if (J < 1) throw DomainError("selector kernel: J must be >= 1");
  KernelSpec k;
  k.kind = KernelKind::selector;
  k.selector = {J, variant};
  k.domain = {-pi, pi};
  return k;
}

KernelSpec KernelSpec::rank_one(std::function<double(double)> u, std::function<double(double)> v,
                                double alpha, Interval domain) {
  KernelSpec k;
  k.kind = KernelKind::rank_one;
  k.symmetric = !v;
  k.u = std::move(u);
  k.v = v ? std::move(v) : k.u;
  k.alpha = alpha;
  k.domain = domain;
  return k;
}

KernelSpec KernelSpec::custom(std::function<double(double, double)> f, Interval domain,
                              bool symmetric, bool kinked) {
  if (!(domain.a < domain.b)) throw DomainError("custom kernel: empty domain");
  KernelSpec k;
  k.kind = KernelKind::custom;
  k.function = std::move(f);
  k.domain = domain;
  k.symmetric = symmetric;
  k.kinked = kinked;
  return k;
}

bool KernelSpec::is_complex() const {
  return kind == KernelKind::selector && selector.variant == SelectorVariant::complex_sum;
}

double KernelSpec::operator()(double x, double y) const {
  switch (kind) {
    case KernelKind::min_xy: return std::min(x, y);
    case KernelKind::green_dirichlet_dirichlet: return x < y ? x * (1.0 - y) : y * (1.0 - x);
    case KernelKind::sine: {
      const double d = x - y;
      const double s = bandwidth;
      if (std::abs(d) < 1e-8) {
        const double z2 = (s * d) * (s * d);
        return s / pi * (1.0 - z2 / 6.0 + z2 * z2 / 120.0);
      }
      return std::sin(s * d) / (pi * d);
    }
    case KernelKind::selector:
      if (is_complex()) throw DomainError("complex selector kernel has no real value");
      return selector_value_delta(selector, x - y).real();
    case KernelKind::rank_one: return alpha * u(x) * v(y);
    case KernelKind::custom: return function(x, y);
  }
  return 0.0;
}

Complex KernelSpec::complex_value(double x, double y) const {
  if (kind == KernelKind::selector) return selector_value_delta(selector, x - y);
  return (*this)(x, y);
}

Complex NystromSystem::matrix_trace() const {
  return is_complex ? trace(complex_matrix) : Complex(trace(matrix));
}

NystromSystem build_nystrom(const KernelSpec& kernel, int n_nodes, Discretization discretization) {
  if (n_nodes < 4) throw DomainError("build_nystrom: need at least 4 nodes");
  const Discretization d = resolve(kernel, discretization);
  if (kernel.kind == KernelKind::selector) {
    if (d == Discretization::galerkin) throw UnsupportedParameter("build_nystrom: selector kernel is periodic, no Galerkin form");
    return build_selector(kernel, n_nodes);
  }
  if (d == Discretization::galerkin) return build_galerkin(kernel, n_nodes);
  return build_plain(kernel, n_nodes);
}

Spectrum eigenvalues_sym(const NystromSystem& system) {
  if (!system.symmetric) throw DomainError("eigenvalues_sym: system is not symmetric");
  Spectrum s;
  s.eigenvalues = system.is_complex ? hermitian_eigenvalues(system.complex_matrix)
                                    : jacobi_eigen(system.matrix).values;
  return s;
}

double spectral_radius_estimate(const NystromSystem& system) {
  return system.is_complex ? radius_of(system.complex_matrix) : radius_of(system.matrix);
}

FredholmResult fredholm_det(const NystromSystem& system, double lambda, Sign sign, Route route) {
  if (lambda == 0.0) {
    FredholmResult r;
    r.route = route;
    return r;
  }
  const double mu = sign == Sign::plus ? lambda : -lambda;
  const double correction = mu * system.trace_tail[0] - 0.5 * mu * mu * system.trace_tail[1];

  FredholmResult r;
  switch (route) {
    case Route::lu:
      r = system.is_complex ? lu_route(system.complex_matrix, mu) : lu_route(system.matrix, mu);
      r.log_abs += correction;
      break;
    case Route::eigenproduct: {
      const Spectrum spectrum = eigenvalues_sym(system);
      r.route = Route::eigenproduct;
      double sign_acc = 1.0;
      for (double e : spectrum.eigenvalues) {
        const double factor = 1.0 + mu * e;
        if (factor == 0.0) {
          r.singular = true;
          continue;
        }
        r.log_abs += std::log(std::abs(factor));
        if (factor < 0.0) sign_acc = -sign_acc;
      }
      r.phase = sign_acc;
      if (r.singular) r.log_abs = -std::numeric_limits<double>::infinity();
      r.log_abs += correction;
      break;
    }
    case Route::trace_series: {
      const double rho = spectral_radius_estimate(system);
      r = system.is_complex ? trace_route(system.complex_matrix, mu, rho, system.trace_tail)
                            : trace_route(system.matrix, mu, rho, system.trace_tail);
      break;
    }
  }
  r.value = r.singular ? Complex(0.0) : r.phase * std::exp(r.log_abs);
  return r;
}

FredholmResult fredholm_det(const KernelSpec& kernel, double lambda, int n_nodes, Sign sign,
                            Route route) {
  return fredholm_det(build_nystrom(kernel, n_nodes), lambda, sign, route);
}

ResolventSolution resolvent_solve(const KernelSpec& kernel, double lambda,
                                  const std::function<double(double)>& g, int n_nodes,
                                  Discretization discretization) {
  if (kernel.is_complex()) throw UnsupportedParameter("resolvent_solve: real kernels only");
  const NystromSystem system = build_nystrom(kernel, n_nodes, discretization);
  const bool galerkin = system.discretization == Discretization::galerkin;
  const std::size_t m = system.rule.size();
  const std::size_t n = system.size();

  ResolventSolution out;
  out.nodes = system.rule.nodes;
  out.g.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.g[i] = g(out.nodes[i]);

  // Right-hand side in the discrete unknowns.
  std::vector<double> b(n, 0.0);
  if (galerkin) {
    for (std::size_t i = 0; i < m; ++i) {
      const double wg = system.rule.weights[i] * out.g[i];
      for (std::size_t k = 0; k < n; ++k) b[k] += wg * system.basis_at_nodes(i, k);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) b[i] = std::sqrt(system.rule.weights[i]) * out.g[i];
  }

  RealMatrix op = system.matrix;
  for (auto& x : op.data()) x *= -lambda;
  for (std::size_t i = 0; i < n; ++i) op(i, i) += 1.0;

  out.determinant = fredholm_det(system, lambda, Sign::minus, Route::lu).value;
  out.singular = std::abs(out.determinant) < 1e-10;

  std::vector<double> c;
  if (!out.singular) {
    c = lu_decompose(op).solve(b);
  } else {
    if (!system.symmetric) throw UnsupportedParameter("resolvent_solve: singular non-symmetric system");
    const SymmetricEigen eig = jacobi_eigen(system.matrix, true);
    std::size_t null_index = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double gap = std::abs(1.0 - lambda * eig.values[j]);
      if (gap < best) {
        best = gap;
        null_index = j;
      }
    }
    double bnorm = 0.0;
    for (double x : b) bnorm += x * x;
    bnorm = std::sqrt(bnorm);
    c.assign(n, 0.0);
    double null_component = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += eig.vectors(i, j) * b[i];
      if (j == null_index) {
        null_component = proj;
        continue;
      }
      const double coeff = proj / (1.0 - lambda * eig.values[j]);
      for (std::size_t i = 0; i < n; ++i) c[i] += coeff * eig.vectors(i, j);
    }
    out.solvable = std::abs(null_component) <= 1e-8 * std::max(bnorm, 1e-300);
    if (!out.solvable) out.residual = std::abs(null_component);
  }

  if (out.solvable) {
    const std::vector<double> oc = multiply(op, c);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += (oc[i] - b[i]) * (oc[i] - b[i]);
    out.residual = std::sqrt(acc);
  }

  out.f.resize(m);
  if (galerkin) {
    // f = g + lambda K f with f expanded in the basis.
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += system.kernel_basis_at_nodes(i, k) * c[k];
      out.f[i] = out.g[i] + lambda * acc;
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) out.f[i] = c[i] / std::sqrt(system.rule.weights[i]);
  }
  return out;
}

}  // namespace fbridge
