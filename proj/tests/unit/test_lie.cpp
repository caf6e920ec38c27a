#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "horo/errors.hpp"
#include "horo/lie/sl.hpp"
#include "horo/lie/su11.hpp"

using namespace horo;
using lie::Matrix;
using lie::Vector;

namespace {

lie::SLMatrix random_sl(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  for (;;) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = g(rng);
    if (std::abs(m.determinant()) > 0.1) return lie::renormalize_det(m);
  }
}

}  // namespace

TEST_CASE("SL(d) Iwasawa factors reassemble") {
  std::mt19937_64 rng(7);
  for (int d : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      const auto g = random_sl(rng, d);
      const auto kan = lie::iwasawa_kan(g);
      CHECK((kan.reassemble() - g.matrix()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((kan.k * kan.k.transpose() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(kan.k.determinant() == doctest::Approx(1.0));
      CHECK(std::abs(kan.a_log.sum()) < 1e-12);
      for (int r = 0; r < d; ++r) {
        CHECK(kan.n(r, r) == doctest::Approx(1.0));
        for (int c = 0; c < r; ++c) CHECK(kan.n(r, c) == 0.0);
      }
      const auto nak = lie::iwasawa_nak(g);
      CHECK((nak.reassemble() - g.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("SLMatrix rejects determinant away from one") {
  CHECK_THROWS_AS(lie::SLMatrix(Matrix::Identity(3, 3) * 2.0), NonUnimodular);
  Matrix m(2, 2);
  m << 0.0, 2.0, 3.0, 0.0;
  CHECK(lie::renormalize_det(m).matrix().determinant() == doctest::Approx(1.0));
}

TEST_CASE("rho closed form and root half-sum") {
  for (int d : {2, 3, 5}) {
    Vector H = Vector::LinSpaced(d, 1.0, -0.5 * d);
    H.array() -= H.mean();
    CHECK(lie::rho(H) == doctest::Approx(lie::rho_half_root_sum(H)).epsilon(1e-14));
    CHECK(lie::positive_roots(d).size() == static_cast<std::size_t>(d * (d - 1) / 2));
    CHECK(lie::simple_roots(d).size() == static_cast<std::size_t>(d - 1));
  }
  CHECK(lie::count_weyl_chambers(3) == 6);
  CHECK(lie::count_weyl_chambers(4) == 24);
}

TEST_CASE("SU(1,1) decompositions") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const auto g = lie::SU11Element::rotation(u(rng)) * lie::SU11Element::boost(u(rng)) *
                   lie::SU11Element::shear(u(rng));
    const auto kan = lie::iwasawa_kan(g);
    const auto back = kan.reassemble();
    CHECK(std::abs(back.a() - g.a()) + std::abs(back.b() - g.b()) < 1e-12);
    const auto nak = lie::iwasawa_nak(g);
    const auto back2 = nak.reassemble();
    CHECK(std::abs(back2.a() - g.a()) + std::abs(back2.b() - g.b()) < 1e-12);
  }
  CHECK_THROWS_AS(lie::SU11Element(2.0, 0.0), NonUnimodular);
}

TEST_CASE("SU(1,1) boost moves the origin along the real axis") {
  const double t = 0.8;
  CHECK(std::abs(lie::SU11Element::boost(t).apply(0.0) - std::tanh(t)) < 1e-15);
  const auto na = lie::na_coordinates(lie::na_point(0.4, -0.3));
  CHECK(na.s == doctest::Approx(0.4));
  CHECK(na.t == doctest::Approx(-0.3));
}

TEST_CASE("Cayley maps") {
  using lie::CayleyDirection;
  const lie::cd z(0.3, -0.2);
  const auto w = lie::cayley(z, CayleyDirection::DiskToHalfPlane);
  CHECK(w.imag() > 0.0);
  CHECK(std::abs(lie::cayley(w, CayleyDirection::HalfPlaneToDisk) - z) < 1e-14);
  CHECK(std::abs(lie::cayley(0.0, CayleyDirection::DiskToHalfPlane) - lie::cd(0.0, 1.0)) < 1e-15);
  CHECK(lie::cayley_literal(z).imag() < 0.0);
}

TEST_CASE("Killing form of H0") {
  const auto basis = lie::su11_basis();
  // ad H0 has eigenvalues 0, +-2 on su(1,1), so B(H0, H0) = 8.
  CHECK(lie::killing_form(basis[0], basis[0]) == doctest::Approx(8.0).epsilon(1e-14));
}
