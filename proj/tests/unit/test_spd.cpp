#include <cmath>

#include "doctest.h"
#include "horo/errors.hpp"
#include "horo/spd/spd.hpp"

using namespace horo;
using spd::Matrix;
using spd::SPDPoint;
using spd::Vector;

TEST_CASE("SPD points are checked") {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(SPDPoint{m}, NotPositiveDefinite);
  m << 2.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(SPDPoint{m}, NotPositiveDefinite);
  m << 2.0, 0.0, 0.0, 0.5;
  CHECK_NOTHROW(SPDPoint{m});
}

TEST_CASE("UDU factorization of a 2x2 point") {
  // p = [[e^{2u}(1 + v^2), v], [v, e^{-2u}]] comes from a = diag(e^u, e^-u), n = [[1, v], [0, 1]]
  const double u = 0.3, v = -0.7;
  Matrix p(2, 2);
  p << std::exp(2 * u) * (1 + v * v), v, v, std::exp(-2 * u);
  const auto f = spd::udu_decompose(SPDPoint(p));
  CHECK(f.u(1, 0) == 0.0);
  CHECK(f.u(0, 0) == doctest::Approx(1.0));
  CHECK(f.diag(0) == doctest::Approx(std::exp(2 * u)).epsilon(1e-14));
  CHECK(f.diag(1) == doctest::Approx(std::exp(-2 * u)).epsilon(1e-14));
  CHECK((f.reassemble() - p).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("horocycle membership through the diagonal of UDU") {
  Vector a(3);
  a << 0.4, -0.1, -0.3;
  Matrix n = Matrix::Identity(3, 3);
  n(0, 1) = 0.5;
  n(0, 2) = -1.2;
  n(1, 2) = 0.8;
  const Matrix k = Matrix::Identity(3, 3);
  const SPDPoint p = spd::n_orbit_point(a, n);
  CHECK(spd::horocycle_membership(p, k, a));
  Vector b = a;
  b(0) += 0.01;
  b(1) -= 0.01;
  CHECK_FALSE(spd::horocycle_membership(p, k, b));
}

TEST_CASE("trace metric and geodesic symmetry") {
  Matrix e11 = Matrix::Zero(3, 3);
  e11(0, 0) = 1.0;
  CHECK(spd::trace_metric(SPDPoint::identity(3), e11, e11) == doctest::Approx(1.0));
  Matrix q(2, 2);
  q << 2.0, 0.5, 0.5, 0.625;
  const SPDPoint Q(q);
  const auto s = spd::geodesic_symmetry(SPDPoint::identity(2), Q);
  CHECK((s.matrix() - q.inverse()).cwiseAbs().maxCoeff() < 1e-14);
  const auto spectrum = spd::sorted_spectrum(Q);
  CHECK(spectrum(0) >= spectrum(1));
  CHECK(spectrum.prod() == doctest::Approx(1.0));
}
