#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "horo/disk/geometry.hpp"

namespace horo::tr {

using cd = std::complex<double>;
using disk::DiskPoint;

struct NABox {
  double s_max = 0.0;
  double t_max = 0.0;
};

// A function on the disk that vanishes (below 1e-14) outside the hyperbolic
// ball of radius support_radius around center.
class TestFunction {
 public:
  using Evaluator = std::function<cd(cd)>;

  TestFunction(std::string label, Evaluator f, DiskPoint center, double support_radius);

  cd operator()(const DiskPoint& x) const { return f_(x.z()); }
  cd at(cd z) const { return f_(z); }

  const std::string& label() const { return label_; }
  const DiskPoint& center() const { return center_; }
  double support_radius() const { return radius_; }
  NABox na_support() const;

  // z -> f(g^{-1} z)
  TestFunction translated(const disk::SU11Element& g, std::string label = "") const;

 private:
  std::string label_;
  Evaluator f_;
  DiskPoint center_;
  double radius_;
};

// amplitude * exp(-d(c,z)^2 / (2 sigma^2)) * exp(i phase_frequency Re z),
// cut to zero where the Gaussian factor drops below 1e-14.
TestFunction gaussian_bump(std::string label, DiskPoint center, double sigma, cd amplitude = 1.0,
                           double phase_frequency = 0.0);
double gaussian_support_radius(double sigma);

// a f + b g, supported in a ball containing both supports.
TestFunction linear_combination(cd a, const TestFunction& f, cd b, const TestFunction& g,
                                std::string label = "");

TestFunction zero_function();
TestFunction reference_bump();
// Bumps with centers within distance 0.6 of o and widths in [0.4, 0.55]; PRNG mt19937_64.
std::vector<TestFunction> seeded_bumps(std::uint64_t seed, int count);

}  // namespace horo::tr
