#pragma once

#include <complex>
#include <span>
#include <vector>

namespace horo::num {

using cd = std::complex<double>;

// Uniform grid on [lo, hi): node k is lo + k*h, or lo + (k + 1/2)*h when staggered,
// with h = (hi - lo)/n.
struct LineGrid {
  double lo = -1.0;
  double hi = 1.0;
  int n = 2;
  bool staggered = false;

  double step() const { return (hi - lo) / n; }
  double node(int k) const { return lo + (k + (staggered ? 0.5 : 0.0)) * step(); }
  std::vector<double> nodes() const;
  void validate() const;
  LineGrid doubled() const;  // same range, twice the nodes
  bool operator==(const LineGrid&) const = default;

  // Grid with n nodes whose spacing is 2*pi/(n * other.step()), centered like `other`.
  static LineGrid conjugate_of(const LineGrid& other);
};

// Quadrature-based Fourier pair between a tau grid and a lambda grid:
// forward  S(l) = c_A * sum_k h_tau s(tau_k) exp(-i l tau_k)
// inverse  s(tau) = sum_j dl_j S(l_j) exp(i l_j tau), with dl = h_lambda / (2 pi c_A).
class FourierPair {
 public:
  FourierPair(LineGrid tau, LineGrid lambda, double c_A);

  const LineGrid& tau() const { return tau_; }
  const LineGrid& lambda() const { return lambda_; }
  double c_A() const { return c_A_; }
  double lambda_weight() const;  // dl per node

  std::vector<cd> forward(std::span<const cd> samples) const;
  cd forward_at(std::span<const cd> samples, double lambda) const;
  std::vector<cd> inverse(std::span<const cd> spectrum, const LineGrid& tau_out) const;
  cd inverse_at(std::span<const cd> spectrum, double tau) const;

 private:
  LineGrid tau_;
  LineGrid lambda_;
  double c_A_;
};

}  // namespace horo::num
