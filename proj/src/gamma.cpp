#include "fbridge/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fbridge/errors.hpp"

namespace fbridge {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z); branch of the log is not tracked.
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace fbridge
