#include "horo/numerics/fourier.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "horo/errors.hpp"
#include "horo/numerics/quadrature.hpp"

namespace horo::num {

std::vector<double> LineGrid::nodes() const {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = node(k);
  return out;
}

void LineGrid::validate() const {
  if (!(lo < hi)) throw ConfigError("grid requires lo < hi");
  if (n < 2) throw ConfigError("grid requires at least two nodes");
  if (staggered && lo < 0.0 && hi > 0.0) {
    for (int k = 0; k < n; ++k)
      if (node(k) == 0.0) throw ConfigError("staggered grid has a node at zero");
  }
}

LineGrid LineGrid::doubled() const { return LineGrid{lo, hi, 2 * n, staggered}; }

LineGrid LineGrid::conjugate_of(const LineGrid& other) {
  const double h = 2.0 * std::numbers::pi / (other.n * other.step());
  const double half = 0.5 * other.n * h;
  return LineGrid{-half, half, other.n, other.staggered};
}

FourierPair::FourierPair(LineGrid tau, LineGrid lambda, double c_A)
    : tau_(std::move(tau)), lambda_(std::move(lambda)), c_A_(c_A) {
  tau_.validate();
  lambda_.validate();
}

double FourierPair::lambda_weight() const {
  return lambda_.step() / (2.0 * std::numbers::pi * c_A_);
}

namespace {

// sum_k w * s_k exp(sign * i * x * (x0 + k h)), via a unit-modulus recurrence
// reseeded every 64 steps.
cd phase_sum(std::span<const cd> s, double x, double x0, double h, double sign) {
  CompensatedComplexSum acc;
  const cd step = std::polar(1.0, sign * x * h);
  cd cur;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k % 64 == 0) cur = std::polar(1.0, sign * x * (x0 + static_cast<double>(k) * h));
    acc.add(s[k] * cur);
    cur *= step;
  }
  return acc.value();
}

}  // namespace

cd FourierPair::forward_at(std::span<const cd> samples, double lambda) const {
  const double h = tau_.step();
  return c_A_ * h * phase_sum(samples, lambda, tau_.node(0), h, -1.0);
}

std::vector<cd> FourierPair::forward(std::span<const cd> samples) const {
  if (static_cast<int>(samples.size()) != tau_.n) throw DomainViolation("sample count mismatch");
  std::vector<cd> out(lambda_.n);
  for (int j = 0; j < lambda_.n; ++j) out[j] = forward_at(samples, lambda_.node(j));
  return out;
}

cd FourierPair::inverse_at(std::span<const cd> spectrum, double tau) const {
  const double h = lambda_.step();
  return lambda_weight() * phase_sum(spectrum, tau, lambda_.node(0), h, 1.0);
}

std::vector<cd> FourierPair::inverse(std::span<const cd> spectrum, const LineGrid& tau_out) const {
  if (static_cast<int>(spectrum.size()) != lambda_.n)
    throw DomainViolation("spectrum count mismatch");
  std::vector<cd> out(tau_out.n);
  for (int k = 0; k < tau_out.n; ++k) out[k] = inverse_at(spectrum, tau_out.node(k));
  return out;
}

}  // namespace horo::num
