#include "horo/transforms/cfunction.hpp"

#include <cmath>
#include <numbers>

#include "horo/errors.hpp"
#include "horo/numerics/gamma.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

double c_abs_sq_inv(double lambda) {
  const double x = 0.5 * std::numbers::pi * lambda;
  return x * std::tanh(x);
}

std::complex<double> c_complex(double lambda) {
  if (lambda == 0.0) throw PoleError("c-function has a pole at lambda = 0");
  using C = std::complex<double>;
  const C num = num::complex_log_gamma(C(0.0, 0.5 * lambda));
  const C den = num::complex_log_gamma(C(0.5, 0.5 * lambda));
  return std::exp(num - den) / std::sqrt(std::numbers::pi);
}

CFunctionEval c_function(double lambda) {
  return {lambda, c_abs_sq_inv(lambda), c_complex(lambda)};
}

double lambda_multiplier_value(double lambda) {
  return std::sqrt(c_abs_sq_inv(lambda) / kWeylOrder);
}

}  // namespace horo::tr
