#include <cmath>
#include <numbers>

#include "doctest.h"
#include "horo/errors.hpp"
#include "horo/numerics/gamma.hpp"
#include "horo/transforms/cfunction.hpp"
#include "horo/transforms/helgason.hpp"
#include "horo/transforms/measures.hpp"
#include "horo/transforms/radon.hpp"
#include "horo/transforms/spectral.hpp"
#include "horo/transforms/test_function.hpp"

using namespace horo;
using tr::cd;
using tr::DiskPoint;

namespace {

tr::MeasureNormalization exact_norm() {
  return {2.0 / std::numbers::pi, 2.0 / std::sqrt(std::numbers::pi), 1.0};
}

tr::TransformGrids small_grids() {
  tr::TransformGrids g;
  g.n_beta = 16;
  g.tau = {-8.0, 8.0, 256, false};
  g.lambda = {-12.0, 12.0, 128, true};
  return g;
}

// (1 - |z|^2)^m = sech^{2m} d(o, z); below 1e-14 beyond d = 3 for m = 8.
tr::TestFunction power_profile(int m) {
  return tr::TestFunction(
      "power", [m](cd z) { return cd(std::pow(1.0 - std::norm(z), m)); }, DiskPoint::origin(), 3.0);
}

}  // namespace

TEST_CASE("normalization constants") {
  const double c_N = tr::calibrate_c_N(tr::default_nbar_spec());
  // int ds / (1 + 4 s^2) = pi / 2
  CHECK(std::abs(c_N - 2.0 / std::numbers::pi) < 1e-10);
  CHECK(std::abs(tr::calibrate_c_A() - 2.0 / std::sqrt(std::numbers::pi)) < 1e-14);
  auto halved = tr::default_nbar_spec();
  halved.truncation *= 0.5;
  CHECK_THROWS_AS(tr::calibrate_c_N(halved), TailToleranceExceeded);
}

TEST_CASE("c-function closed form and Gamma form") {
  for (double l : {0.05, 0.5, 2.0, 7.5, 50.0}) {
    const auto e = tr::c_function(l);
    const double closed = 0.5 * std::numbers::pi * l * std::tanh(0.5 * std::numbers::pi * l);
    CHECK(e.c_abs_sq_inv == doctest::Approx(closed).epsilon(1e-13));
    CHECK(1.0 / std::norm(e.c_complex) == doctest::Approx(closed).epsilon(1e-9));
  }
  CHECK_THROWS_AS(tr::c_function(0.0), PoleError);
  CHECK(tr::c_abs_sq_inv(0.0) == 0.0);
  CHECK(tr::lambda_multiplier_value(2.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 / (std::numbers::pi * std::tanh(std::numbers::pi)))));
}

TEST_CASE("Radon transform of a radial power profile has a closed form") {
  // along a_tau n_s [o]: cosh 2d = cosh 2 tau + 2 s^2 e^{2 tau}, so
  // R f(tau) = c_N 2^m sqrt(pi) Gamma(m - 1/2)/Gamma(m) (2 cosh^2 tau)^{1/2 - m} (2 e^{2 tau})^{-1/2}
  const int m = 8;
  const auto f = power_profile(m);
  const auto norm = exact_norm();
  const double gam = (num::complex_gamma(m - 0.5) / num::complex_gamma(m)).real();
  num::QuadratureSpec quad{num::Rule::GaussLegendre, 24, 8, 1.0, 1e-12};
  for (double beta : {0.0, 2.0})
    for (double tau : {-1.5, -0.3, 0.0, 0.8, 2.0}) {
      const cd r = tr::radon(f, {disk::BoundaryPoint(beta), tau}, norm, quad);
      const double c2 = std::cosh(tau) * std::cosh(tau);
      const double expect = norm.c_N * std::pow(2.0, m) * std::sqrt(std::numbers::pi) * gam *
                            std::pow(2.0 * c2, 0.5 - m) / std::sqrt(2.0 * std::exp(2.0 * tau));
      CHECK(std::abs(r - expect) <= 1e-10 * std::abs(expect) + 1e-15);
    }
}

TEST_CASE("L2 norm of a radial gaussian") {
  // int_X e^{-d^2/sigma^2} dx = c_N c_A pi int_0^inf e^{-r^2/sigma^2} sinh 2r dr = 2 sigma e^{sigma^2} erf(sigma)
  const double sigma = 0.45;
  const auto f = tr::gaussian_bump("g", DiskPoint::origin(), sigma);
  const double n = tr::norm_x(f, exact_norm(), small_grids());
  const double expect = 2.0 * sigma * std::exp(sigma * sigma) * std::erf(sigma);
  CHECK(n * n == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("zero function has zero transforms") {
  const auto z = tr::zero_function();
  const auto norm = exact_norm();
  const auto g = small_grids();
  for (const cd v : tr::radon_grid(z, norm, g).samples) CHECK(v == cd(0.0));
  for (const cd v : tr::helgason_grid(z, norm, g).samples) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("transforms are linear") {
  const auto norm = exact_norm();
  const auto g = small_grids();
  const DiskPoint c(cd(0.2, -0.1));
  const auto f1 = tr::gaussian_bump("f1", c, 0.4, cd(1.0, 0.5));
  const auto f2 = tr::gaussian_bump("f2", c, 0.5, cd(-0.3, 0.2), 0.7);
  const cd a(0.7, -0.2), b(-1.1, 0.4);
  const auto sum = tr::linear_combination(a, f1, b, f2);
  const auto R1 = tr::radon_grid(f1, norm, g), R2 = tr::radon_grid(f2, norm, g);
  const auto RS = tr::radon_grid(sum, norm, g);
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < RS.samples.size(); ++i) {
    worst = std::max(worst, std::abs(RS.samples[i] - a * R1.samples[i] - b * R2.samples[i]));
    scale = std::max(scale, std::abs(RS.samples[i]));
  }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("OpenMP kernels agree with the serial reference") {
  const auto norm = exact_norm();
  const auto g = small_grids();
  const auto f = tr::seeded_bumps(5, 1).front();
  const auto R = tr::radon_grid(f, norm, g);
  const auto Rs = tr::serial::radon_grid(f, norm, g);
  REQUIRE(R.samples.size() == Rs.samples.size());
  for (std::size_t i = 0; i < R.samples.size(); ++i) CHECK(R.samples[i] == Rs.samples[i]);
  const auto H = tr::helgason_grid(f, norm, g);
  const auto Hs = tr::serial::helgason_grid(f, norm, g);
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < H.samples.size(); ++i) {
    worst = std::max(worst, std::abs(H.samples[i] - Hs.samples[i]));
    scale = std::max(scale, std::abs(Hs.samples[i]));
  }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("Helgason transform at one point matches the grid") {
  const auto norm = exact_norm();
  const auto g = small_grids();
  const auto f = tr::seeded_bumps(9, 1).front();
  const auto H = tr::helgason_grid(f, norm, g);
  const int i = 3, j = 70;
  const cd v = tr::helgason_fourier(f, disk::BoundaryPoint(H.beta(i)), g.lambda.node(j), norm, g);
  CHECK(std::abs(v - H.at(i, j)) <= 1e-12 * std::abs(v));
}

TEST_CASE("Lambda multiplier round trip through phi_o") {
  const auto norm = exact_norm();
  auto g = small_grids();
  g.lambda = {-24.0, 24.0, 256, true};
  const auto f = tr::reference_bump();
  const auto R = tr::radon_grid(f, norm, g);
  const auto S = tr::phi_o(R, norm, g.lambda);
  const auto back = tr::phi_o_inverse(S, norm, g.tau);
  CHECK(tr::relative_xi_distance(back, R, norm) < 1e-8);
}

TEST_CASE("bumps are rejected with nonpositive width") {
  CHECK_THROWS_AS(tr::gaussian_bump("bad", DiskPoint::origin(), 0.0), DomainViolation);
  const auto b = tr::seeded_bumps(42, 3);
  const auto c = tr::seeded_bumps(42, 3);
  CHECK(b.size() == 3);
  CHECK(b[1].center().z() == c[1].center().z());
}
