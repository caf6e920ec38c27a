#include "horo/numerics/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "horo/errors.hpp"

namespace horo::num {

namespace {

using cd = std::complex<double>;

constexpr double kG = 7.0;
constexpr std::array<double, 9> kCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(cd z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))
    throw PoleError("Gamma has a pole at a nonpositive integer");
}

// log Gamma for Re z >= 1/2
cd log_gamma_right(cd z) {
  z -= 1.0;
  cd x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
  const cd t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cd complex_log_gamma(cd z) {
  check_pole(z);
  if (z.real() < 0.5) {
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

cd complex_gamma(cd z) {
  check_pole(z);
  if (z.real() < 0.5) {
    const double pi = std::numbers::pi;
    return pi / (std::sin(pi * z) * std::exp(log_gamma_right(1.0 - z)));
  }
  return std::exp(log_gamma_right(z));
}

}  // namespace horo::num
