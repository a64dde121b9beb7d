#pragma once

#include <complex>

namespace fbridge {

// Principal log Gamma via the Lanczos approximation (g = 7, 9 terms) with the
// reflection formula for Re z < 1/2. Relative error is about 1e-14 away from
// the poles at the nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

}  // namespace fbridge
