#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "horo/errors.hpp"
#include "horo/numerics/fourier.hpp"
#include "horo/numerics/gamma.hpp"
#include "horo/numerics/quadrature.hpp"

using namespace horo;
using num::cd;

TEST_CASE("gauss-legendre is exact for degree 2n-1") {
  const auto& gl = num::gauss_legendre(8);
  double sum14 = 0.0, sum15 = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < gl.size(); ++i) {
    sum14 += gl.w[i] * std::pow(gl.x[i], 14);
    sum15 += gl.w[i] * std::pow(gl.x[i], 15);
    wsum += gl.w[i];
  }
  CHECK(sum14 == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  CHECK(std::abs(sum15) < 1e-15);
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t i = 1; i < gl.size(); ++i) CHECK(gl.x[i] > gl.x[i - 1]);
}

TEST_CASE("gaussian integral matches sqrt(pi) erf") {
  num::QuadratureSpec spec{num::Rule::GaussLegendre, 16, 8, 6.0, 1e-12};
  const auto r = num::integrate_1d([](double t) { return cd(std::exp(-t * t)); }, spec);
  const double expect = std::sqrt(std::numbers::pi) * std::erf(6.0);
  CHECK(std::abs(r.value.real() - expect) < 1e-14);
  CHECK(r.error_estimate < 1e-10);

  num::QuadratureSpec trap{num::Rule::Trapezoid, 8, 8, 6.0, 1e-12};
  const auto t = num::integrate_1d([](double x) { return cd(std::exp(-x * x)); }, trap);
  CHECK(std::abs(t.value.real() - expect) < 1e-13);
}

TEST_CASE("integration reports an unresolved tail") {
  num::QuadratureSpec spec{num::Rule::GaussLegendre, 16, 8, 2.0, 1e-12};
  CHECK_THROWS_AS(num::integrate_1d([](double t) { return cd(std::exp(-t * t)); }, spec),
                  TailToleranceExceeded);
}

TEST_CASE("quadrature spec validation") {
  num::QuadratureSpec spec;
  spec.panels = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec = {};
  spec.truncation = -1.0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  CHECK(num::QuadratureSpec{}.refined().panels == 2 * num::QuadratureSpec{}.panels);
}

TEST_CASE("complex gamma identities") {
  CHECK(std::abs(num::complex_gamma(5.0) - 24.0) < 1e-12);
  CHECK(std::abs(num::complex_gamma(0.5) - std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(std::abs(num::complex_gamma(-0.5) + 2.0 * std::sqrt(std::numbers::pi)) < 1e-13);
  for (cd z : {cd(0.3, 1.7), cd(2.5, -4.0), cd(-1.3, 0.4), cd(0.01, 25.0)}) {
    const cd g = num::complex_gamma(z);
    CHECK(std::abs(num::complex_gamma(z + 1.0) - z * g) <= 1e-12 * std::abs(z * g));
    const cd reflection = std::numbers::pi / std::sin(std::numbers::pi * z);
    CHECK(std::abs(g * num::complex_gamma(1.0 - z) - reflection) <= 1e-13 * std::abs(reflection));
    CHECK(std::abs(std::exp(num::complex_log_gamma(z)) - g) <= 1e-12 * std::abs(g));
  }
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  const double y = 1.3;
  CHECK(std::norm(num::complex_gamma(cd(0.0, y))) ==
        doctest::Approx(std::numbers::pi / (y * std::sinh(std::numbers::pi * y))).epsilon(1e-13));
  CHECK_THROWS_AS(num::complex_gamma(-2.0), PoleError);
}

TEST_CASE("fourier pair transforms a gaussian to a gaussian") {
  const num::LineGrid tau{-12.0, 12.0, 256, false};
  const num::LineGrid lambda{-10.0, 10.0, 200, true};
  const double c_A = 2.0 / std::sqrt(std::numbers::pi);
  const num::FourierPair pair(tau, lambda, c_A);
  std::vector<cd> s(tau.n);
  for (int k = 0; k < tau.n; ++k) s[k] = std::exp(-0.5 * tau.node(k) * tau.node(k));
  const auto S = pair.forward(s);
  for (int j = 0; j < lambda.n; ++j) {
    const double l = lambda.node(j);
    CHECK(std::abs(S[j] - c_A * std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * l * l)) < 1e-13);
  }
  const auto back = pair.inverse(S, tau);
  for (int k = 0; k < tau.n; ++k) CHECK(std::abs(back[k] - s[k]) < 1e-12);
  CHECK(std::abs(pair.inverse_at(S, 0.7) - std::exp(-0.245)) < 1e-12);
}

TEST_CASE("conjugate grid spacing") {
  const num::LineGrid lambda{-24.0, 24.0, 512, true};
  const auto tau = num::LineGrid::conjugate_of(lambda);
  CHECK(tau.n == 512);
  CHECK(tau.step() == doctest::Approx(2.0 * std::numbers::pi / (512 * lambda.step())));
  CHECK(lambda.doubled().n == 1024);
  CHECK_THROWS_AS((num::LineGrid{1.0, 0.0, 4, false}.validate()), ConfigError);
}

TEST_CASE("compensated sum keeps small terms") {
  num::CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 10; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 10.0);
}
