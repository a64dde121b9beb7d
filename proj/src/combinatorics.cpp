#include "fbridge/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fbridge/errors.hpp"

namespace fbridge {
namespace {

void check_index(int n, const CombinatoricsLimits& limits, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative index");
  if (n > limits.bernoulli_cap) {
    throw SizeError(std::string(what) + ": index " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.bernoulli_cap));
  }
}

// Append-only memo. Readers share the lock; extension takes it exclusively
// and recomputes nothing that is already present.
class BernoulliTable {
 public:
  Rational get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= static_cast<std::size_t>(n)) {
      const auto m = static_cast<unsigned>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      // sum_{k=0}^{m} C(m+1,k) B_k = 0
      Rational acc(0);
      for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * values_[k];
      values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

// Coefficients h_k of log(t/(e^t - 1)) = sum h_k t^k, memoized like the
// Bernoulli table. g_k = B_k/k! are the coefficients of t/(e^t-1), g_0 = 1,
// and k h_k = k g_k - sum_{j=1}^{k-1} j h_j g_{k-j}.
class LogSeriesTable {
 public:
  std::vector<Rational> prefix(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<int>(h_.size()) > n) return {h_.begin(), h_.begin() + n + 1};
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(h_.size()) <= n) {
      const auto k = static_cast<unsigned>(h_.size());
      g_.push_back(bernoulli_table().get(static_cast<int>(k)) / Rational(factorial(k)));
      if (k == 0) {
        h_.emplace_back(0);
        continue;
      }
      Rational acc = Rational(static_cast<long>(k)) * g_[k];
      for (unsigned j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * h_[j] * g_[k - j];
      h_.push_back(acc / Rational(static_cast<long>(k)));
    }
    return {h_.begin(), h_.begin() + n + 1};
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> g_;
  std::vector<Rational> h_;
};

LogSeriesTable& log_series_table() {
  static LogSeriesTable table;
  return table;
}

}  // namespace

Rational bernoulli_number(int n, const CombinatoricsLimits& limits) {
  check_index(n, limits, "bernoulli_number");
  return bernoulli_table().get(n);
}

RationalPolynomial bernoulli_polynomial(int n, const CombinatoricsLimits& limits) {
  check_index(n, limits, "bernoulli_polynomial");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  const auto un = static_cast<unsigned>(n);
  for (unsigned k = 0; k <= un; ++k) {
    coeffs[un - k] = Rational(binomial(un, k)) * bernoulli_table().get(static_cast<int>(k));
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial norlund_polynomial(int n, const Rational& alpha,
                                      const CombinatoricsLimits& limits) {
  check_index(n, limits, "norlund_polynomial");
  const std::vector<Rational> h = log_series_table().prefix(n);

  // e = exp(alpha * h): k e_k = sum_{j=1}^{k} j (alpha h_j) e_{k-j}
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) {
      if (h[j].is_zero()) continue;
      acc += Rational(static_cast<long>(j)) * h[j] * e[k - j];
    }
    e[k] = alpha * acc / Rational(static_cast<long>(k));
  }

  // Multiply by e^{xt}; coefficient of x^m t^n/n! is n! e_{n-m} / m!.
  const BigInt nfact = factorial(static_cast<unsigned>(n));
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    coeffs[m] = Rational(nfact) * e[n - m] / Rational(factorial(static_cast<unsigned>(m)));
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational norlund_polynomial(int n, const Rational& alpha, const Rational& x,
                            const CombinatoricsLimits& limits) {
  return norlund_polynomial(n, alpha, limits)(x);
}

BigInt stirling2(int n, int k, const CombinatoricsLimits& limits) {
  check_index(n, limits, "stirling2");
  if (k < 0) throw DomainError("stirling2: negative k");
  if (k > n) return 0;
  // Row-by-row triangle, keeping only columns 0..k.
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt stirling2_norlund(int n, int k, const CombinatoricsLimits& limits) {
  check_index(n, limits, "stirling2_norlund");
  if (k < 0) throw DomainError("stirling2_norlund: negative k");
  if (k > n) return 0;
  const Rational value = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                         norlund_polynomial(n - k, Rational(-k), Rational(0), limits);
  if (!value.is_integer()) {
    throw NumericalError("stirling2_norlund: non-integer result " + value.str());
  }
  return value.numerator();
}

}  // namespace fbridge
