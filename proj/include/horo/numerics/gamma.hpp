#pragma once

#include <complex>

namespace horo::num {

// Lanczos (g = 7, nine terms) with reflection below Re z = 1/2.
std::complex<double> complex_gamma(std::complex<double> z);
std::complex<double> complex_log_gamma(std::complex<double> z);

}  // namespace horo::num
