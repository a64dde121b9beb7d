#include "fbridge/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace fbridge {
namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) acc += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

}  // namespace

SymmetricEigen jacobi_eigen(RealMatrix a, bool want_vectors) {
  if (!a.square()) throw SizeError("jacobi_eigen: matrix not square");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (std::abs(a(i, j)) + std::abs(a(j, i)) + 1e-300)) {
        throw DomainError("jacobi_eigen: matrix is not symmetric");
      }
    }
  }

  SymmetricEigen out;
  RealMatrix v;
  if (want_vectors) v = RealMatrix::identity(n);

  const double off0 = off_diagonal_norm(a);
  const double target = std::min(1e-12 * off0, 1e-14 * frobenius_norm(a));
  constexpr int kMaxSweeps = 100;
  double off = off0;
  while (off > target) {
    if (out.sweeps == kMaxSweeps) throw NumericalError("jacobi_eigen: no convergence after 100 sweeps");
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Negligible against both diagonal entries: drop it outright.
        if (out.sweeps > 4 && std::abs(apq) * 1e18 < std::abs(app) &&
            std::abs(apq) * 1e18 < std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        double* rp = a.row(p);
        double* rq = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = rp[k];
          const double aqk = rq[k];
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(a(i, i)) > std::abs(a(j, j));
  });
  out.values.resize(n);
  if (want_vectors) out.vectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    if (want_vectors) {
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (!a.square()) throw SizeError("hermitian_eigenvalues: matrix not square");
  const std::size_t n = a.rows();
  RealMatrix e(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto z = a(i, j);
      e(i, j) = z.real();
      e(i + n, j + n) = z.real();
      e(i, j + n) = -z.imag();
      e(i + n, j) = z.imag();
    }
  }
  const SymmetricEigen doubled = jacobi_eigen(std::move(e));
  // Each Hermitian eigenvalue shows up twice; after the magnitude sort the
  // copies are adjacent up to rounding, so sorting by value and taking every
  // other entry recovers the list.
  std::vector<double> values = doubled.values;
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < values.size(); i += 2) out.push_back(0.5 * (values[i] + values[i + 1]));
  std::stable_sort(out.begin(), out.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
  return out;
}

std::vector<double> least_squares(RealMatrix a, std::vector<double> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw SizeError("least_squares: fewer rows than unknowns");
  if (b.size() != m) throw SizeError("least_squares: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("least_squares: rank deficient");
    const double alpha = a(k, k) > 0.0 ? -norm : norm;
    std::vector<double> u(m - k);
    for (std::size_t i = k; i < m; ++i) u[i - k] = a(i, k);
    u[0] -= alpha;
    double unorm2 = 0.0;
    for (double x : u) unorm2 += x * x;
    if (unorm2 == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += u[i - k] * a(i, j);
      const double f = 2.0 * dot / unorm2;
      for (std::size_t i = k; i < m; ++i) a(i, j) -= f * u[i - k];
    }
    double dot = 0.0;
    for (std::size_t i = k; i < m; ++i) dot += u[i - k] * b[i];
    const double f = 2.0 * dot / unorm2;
    for (std::size_t i = k; i < m; ++i) b[i] -= f * u[i - k];
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    if (std::abs(a(i, i)) < 1e-14 * max_abs(a)) throw NumericalError("least_squares: ill-conditioned system");
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace fbridge
