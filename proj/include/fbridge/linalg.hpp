#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "fbridge/errors.hpp"

namespace fbridge {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T* row(std::size_t i) { return data_.data() + i * cols_; }
  const T* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw SizeError("multiply: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T* ci = c.row(i);
    const T* ai = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = ai[k];
      const T* bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw SizeError("multiply: shape mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc{};
    const T* ai = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <class T>
T trace(const Matrix<T>& a) {
  T acc{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) acc += a(i, i);
  return acc;
}

template <class T>
double frobenius_norm(const Matrix<T>& a) {
  double acc = 0.0;
  for (const T& x : a.data()) acc += std::norm(x);
  return std::sqrt(acc);
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const T& x : a.data()) m = std::max(m, static_cast<double>(std::abs(x)));
  return m;
}

// P A = L U with partial pivoting. The determinant is kept as log|det| plus a
// unit phase (a sign for real T) so that large systems neither overflow nor
// underflow.
template <class T>
struct LUDecomposition {
  Matrix<T> lu;
  std::vector<std::size_t> pivots;
  bool singular = false;
  double log_abs_det = 0.0;
  T phase{1};

  T determinant() const { return singular ? T{} : phase * std::exp(log_abs_det); }

  std::vector<T> solve(std::vector<T> b) const {
    if (singular) throw NumericalError("LU solve: matrix is singular");
    const std::size_t n = lu.rows();
    if (b.size() != n) throw SizeError("LU solve: shape mismatch");
    for (std::size_t i = 0; i < n; ++i) std::swap(b[i], b[pivots[i]]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) b[i] -= lu(i, k) * b[k];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) b[i] -= lu(i, k) * b[k];
      b[i] /= lu(i, i);
    }
    return b;
  }
};

template <class T>
LUDecomposition<T> lu_decompose(Matrix<T> a) {
  if (!a.square()) throw SizeError("lu_decompose: matrix not square");
  const std::size_t n = a.rows();
  LUDecomposition<T> out;
  out.pivots.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    out.pivots[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      out.phase = -out.phase;
    }
    const T pivot = a(k, k);
    if (best == 0.0) {
      out.singular = true;
      out.log_abs_det = -std::numeric_limits<double>::infinity();
      continue;
    }
    out.log_abs_det += std::log(best);
    out.phase *= pivot / T(best);
    T* rk = a.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      T* ri = a.row(i);
      const T factor = ri[k] / pivot;
      ri[k] = factor;
      if (factor == T{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= factor * rk[j];
    }
  }
  out.lu = std::move(a);
  return out;
}

struct SymmetricEigen {
  // Sorted by decreasing magnitude; vectors(:, j) pairs with values[j].
  std::vector<double> values;
  RealMatrix vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops once the off-diagonal
/// Frobenius norm is below 1e-12 of its initial value (and 1e-14 of the full
/// norm); 100 sweeps without that raise NumericalError.
SymmetricEigen jacobi_eigen(RealMatrix a, bool want_vectors = false);

// Eigenvalues of a Hermitian matrix through the real symmetric embedding
// [[Re, -Im], [Im, Re]], whose spectrum is the Hermitian one doubled.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Minimizes |A x - b| by Householder QR. Requires rows >= cols and full rank.
std::vector<double> least_squares(RealMatrix a, std::vector<double> b);

}  // namespace fbridge
