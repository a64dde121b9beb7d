#pragma once

#include <optional>

#include "fbridge/quadrature.hpp"

namespace fbridge {

enum class BernoulliRoute { hurwitz, fourier };

struct AnalyticBernoulliValue {
  Complex s;
  double x = 0.0;
  Complex value;
  BernoulliRoute route = BernoulliRoute::hurwitz;
  std::optional<double> tail_bound;  // fourier only
};

/// B(s; x) = -s zeta(1-s, x). For |s| < 1e-6 the removable point s = 0 is
/// replaced by its limit 1.
AnalyticBernoulliValue analytic_bernoulli(Complex s, double x);

// standard: -Gamma(s+1) sum_{n != 0} e^{2 pi i n x}/(2 pi i n)^s, which
// reproduces B_n(x) at integer s.
// displayed: Gamma(s+1)/(2 pi)^s times the same sum, i.e. the standard value
// multiplied by -(2 pi)^-s.
enum class FourierNormalization { standard, displayed };

/// Symmetric partial sum over 0 < |n| <= N with the principal branch
/// (2 pi i n)^s = exp(s (log(2 pi |n|) + i pi/2 sign n)); the n and -n terms
/// are conjugate and combine to 2 (2 pi n)^-s cos(2 pi n x - pi s/2).
/// tail_bound = 2 Gamma(s+1) (2 pi)^-s N^(1-s)/(s-1) (scaled the same way
/// for the displayed normalization).
AnalyticBernoulliValue fourier_bernoulli(double s, double x, int N,
                                         FourierNormalization normalization = FourierNormalization::standard);

}  // namespace fbridge
