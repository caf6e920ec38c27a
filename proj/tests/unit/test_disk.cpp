#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "horo/disk/geometry.hpp"
#include "horo/errors.hpp"

using namespace horo;
using disk::BoundaryPoint;
using disk::cd;
using disk::DiskPoint;
using disk::SU11Element;

namespace {

struct Draw {
  std::mt19937_64 rng{2024};
  std::uniform_real_distribution<double> u{-1.0, 1.0};
  DiskPoint point() { return DiskPoint(std::polar(0.9 * std::abs(u(rng)), 4.0 * u(rng))); }
  SU11Element group() {
    return SU11Element::rotation(3.0 * u(rng)) * SU11Element::boost(u(rng)) *
           SU11Element::shear(u(rng));
  }
  BoundaryPoint boundary() { return BoundaryPoint(std::numbers::pi * (1.0 + u(rng))); }
};

}  // namespace

TEST_CASE("disk points must lie inside the unit disk") {
  CHECK_THROWS_AS(DiskPoint(cd(1.0, 0.0)), DomainViolation);
  CHECK_NOTHROW(DiskPoint(cd(0.5, 0.5)));
}

TEST_CASE("Mobius action is a group action by isometries") {
  Draw d;
  for (int i = 0; i < 30; ++i) {
    const auto g = d.group(), h = d.group();
    const auto x = d.point(), y = d.point();
    CHECK(std::abs(disk::mobius(g * h, x).z() - disk::mobius(g, disk::mobius(h, x)).z()) < 1e-12);
    CHECK(disk::distance(disk::mobius(g, x), disk::mobius(g, y)) ==
          doctest::Approx(disk::distance(x, y)).epsilon(1e-11));
  }
  // with this normalization d(o, z) = artanh |z|
  CHECK(disk::distance_to_origin(DiskPoint(cd(0.0, std::tanh(1.25)))) == doctest::Approx(1.25));
}

TEST_CASE("Borel section lands on the point") {
  Draw d;
  for (int i = 0; i < 20; ++i) {
    const auto x = d.point();
    CHECK(std::abs(disk::mobius(disk::borel_section(x), DiskPoint::origin()).z() - x.z()) < 1e-13);
    const auto na = disk::na_coordinates(x);
    CHECK(std::abs(disk::from_na(na.s, na.t).z() - x.z()) < 1e-13);
  }
}

TEST_CASE("composite distance cocycle and invariance") {
  Draw d;
  for (int i = 0; i < 30; ++i) {
    const auto x = d.point(), y = d.point(), z = d.point();
    const auto b = d.boundary();
    const double lhs = disk::composite_distance(x, z, b);
    const double rhs = disk::composite_distance(x, y, b) + disk::composite_distance(y, z, b);
    CHECK(std::abs(lhs - rhs) < 1e-10);
    const auto g = d.group();
    const double moved = disk::composite_distance(disk::mobius(g, x), disk::mobius(g, y),
                                                  disk::boundary_action(g, b));
    CHECK(std::abs(moved - disk::composite_distance(x, y, b)) < 1e-10);
    // The Poisson expression agrees with this normalization.
    CHECK(std::abs(disk::composite_distance(y, b) - disk::poisson_composite_distance(y, b)) < 1e-10);
  }
}

TEST_CASE("basic horocycle through the origin") {
  const disk::HorocycleParam h{BoundaryPoint(0.0), 0.0};
  const auto c = disk::horocycle_circle(h, DiskPoint::origin());
  CHECK(std::abs(c.center - cd(0.5, 0.0)) < 1e-12);
  CHECK(c.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.tangency_defect() < 1e-12);
  for (double s : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
    const auto p = disk::horocycle_point(h, DiskPoint::origin(), s);
    CHECK(std::abs(std::abs(p.z() - c.center) - c.radius) < 1e-12);
    CHECK(disk::horocycle_membership(p, h, DiskPoint::origin()));
  }
  CHECK_FALSE(disk::horocycle_membership(DiskPoint(cd(-0.3, 0.0)), h, DiskPoint::origin()));
}

TEST_CASE("horocycle family stays tangent to the boundary") {
  for (double beta : {0.0, 1.0, 4.0})
    for (double tau : {-2.0, -0.5, 0.0, 1.5}) {
      const auto c = disk::horocycle_circle({BoundaryPoint(beta), tau}, DiskPoint::origin());
      CHECK(c.tangency_defect() < 1e-12);
      CHECK(std::abs(c.center / std::abs(c.center) - std::polar(1.0, beta)) < 1e-9);
    }
}

TEST_CASE("boundary measure is a probability measure with the expected density") {
  CHECK(std::abs(disk::integrate_boundary([](const BoundaryPoint&) { return cd(1.0); }, 64) - 1.0) < 1e-14);
  const DiskPoint x(cd(0.3, -0.4));
  const cd mass = disk::integrate_boundary(
      [&](const BoundaryPoint& b) { return cd(disk::boundary_density(x, b)); }, 512);
  CHECK(std::abs(mass - 1.0) < 1e-12);
}
