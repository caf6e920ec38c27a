#pragma once

#include <complex>

namespace horo::tr {

struct CFunctionEval {
  double lambda = 0.0;
  double c_abs_sq_inv = 0.0;        // (pi l / 2) tanh(pi l / 2)
  std::complex<double> c_complex;   // pi^{-1/2} Gamma(i l / 2) / Gamma((i l + 1)/2)
};

// Throws PoleError at lambda = 0.
CFunctionEval c_function(double lambda);
// Closed form; continuous through 0.
double c_abs_sq_inv(double lambda);
std::complex<double> c_complex(double lambda);
// 1 / (sqrt(w) |c(lambda)|), w = 2
double lambda_multiplier_value(double lambda);

}  // namespace horo::tr
