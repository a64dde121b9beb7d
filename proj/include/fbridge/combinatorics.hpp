#pragma once

#include "fbridge/rational.hpp"

namespace fbridge {

// Upper limits for the memoized combinatorial tables. These are configuration,
// not hard limits: raise them if a computation legitimately needs more.
struct CombinatoricsLimits {
  int bernoulli_cap = 200;
};

/// Exact Bernoulli number B_n with the generating-function convention
/// t/(e^t - 1) = sum B_n t^n / n!, which forces B_1 = -1/2 (some references
/// use +1/2; this library never does).
///
/// Values are memoized in a process-wide append-only table that is safe to
/// read from several threads. Throws SizeError when n exceeds the cap.
Rational bernoulli_number(int n, const CombinatoricsLimits& limits = {});

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
RationalPolynomial bernoulli_polynomial(int n, const CombinatoricsLimits& limits = {});

/// Coefficients (in x) of the Norlund polynomial B_n^(alpha)(x), defined by
/// (t/(e^t-1))^alpha e^(xt) = sum B_n^(alpha)(x) t^n/n!. Computed by exact
/// power-series composition exp(alpha * log(t/(e^t-1))), so alpha may be any
/// rational, negative values included.
RationalPolynomial norlund_polynomial(int n, const Rational& alpha,
                                      const CombinatoricsLimits& limits = {});

Rational norlund_polynomial(int n, const Rational& alpha, const Rational& x,
                            const CombinatoricsLimits& limits = {});

// Stirling numbers of the second kind. Both return 0 for k > n.
// Triangular recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
BigInt stirling2(int n, int k, const CombinatoricsLimits& limits = {});
// S(n,k) = C(n,k) * B_{n-k}^(-k)(0).
BigInt stirling2_norlund(int n, int k, const CombinatoricsLimits& limits = {});

}  // namespace fbridge
