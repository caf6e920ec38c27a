#include "horo/disk/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "horo/errors.hpp"
#include "horo/numerics/quadrature.hpp"

namespace horo::disk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double normalize_angle(double beta) {
  double r = std::fmod(beta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DiskPoint::DiskPoint(cd z) : z_(z) {
  if (!(std::abs(z) < 1.0 - 1e-12))
    throw DomainViolation("point " + std::to_string(std::abs(z)) + " is not inside the disk");
}

BoundaryPoint::BoundaryPoint(double beta) : beta_(normalize_angle(beta)) {
  if (!std::isfinite(beta)) throw DomainViolation("boundary angle must be finite");
}

DiskPoint mobius(const SU11Element& g, const DiskPoint& x) { return DiskPoint(g.apply(x.z())); }

BoundaryPoint mobius(const SU11Element& g, const BoundaryPoint& b) {
  return BoundaryPoint(std::arg(g.apply(b.point())));
}

double distance_to_origin(const DiskPoint& x) { return std::atanh(std::abs(x.z())); }

double distance(const DiskPoint& x, const DiskPoint& y) {
  return distance_to_origin(mobius(borel_section(x).inverse(), y));
}

NACoordinates na_coordinates(const DiskPoint& x) {
  const auto st = lie::na_coordinates(x.z());
  return {st.s, st.t};
}

DiskPoint from_na(double s, double t) { return DiskPoint(lie::na_point(s, t)); }

SU11Element borel_section(const DiskPoint& x) {
  const auto st = na_coordinates(x);
  return SU11Element::shear(st.s) * SU11Element::boost(st.t);
}

SU11Element kappa(const DiskPoint& x, const SU11Element& k) {
  const SU11Element sx = borel_section(x);
  const auto kan = lie::iwasawa_kan(sx.inverse() * k);
  return sx * SU11Element::rotation(kan.theta) * sx.inverse();
}

double composite_distance(const DiskPoint& x, const DiskPoint& y, const BoundaryPoint& b) {
  // A_x(g) = A_o(g s_o(x)) - t(x), applied to g = kappa_x(k)^{-1} s_o(y) s_o(x)^{-1}.
  const SU11Element kx = kappa(x, b.representative());
  return lie::iwasawa_nak(kx.inverse() * borel_section(y)).t - na_coordinates(x).t;
}

double composite_distance(const DiskPoint& y, const BoundaryPoint& b) {
  return lie::na_coordinates(std::polar(1.0, -b.beta()) * y.z()).t;
}

double poisson_composite_distance(const DiskPoint& y, const BoundaryPoint& b) {
  const double r2 = std::norm(y.z());
  return 0.5 * std::log((1.0 - r2) / std::norm(y.z() - b.point()));
}

BoundaryPoint boundary_action(const SU11Element& g, const BoundaryPoint& b) {
  return BoundaryPoint(2.0 * lie::iwasawa_kan(g * b.representative()).theta);
}

DiskPoint horocycle_point(const HorocycleParam& h, const DiskPoint& x, double s) {
  const SU11Element g = kappa(x, h.b.representative()) * SU11Element::boost(h.tau) *
                        SU11Element::shear(s);
  return mobius(g * borel_section(x), DiskPoint::origin());
}

EuclideanCircle horocycle_circle(const HorocycleParam& h, const DiskPoint& x) {
  // Re-reference at o; Psi_o(b, tau) is the circle tangent at b through e^{i beta} tanh(tau).
  const HorocycleParam ho = rereference_horocycle(h, x, DiskPoint::origin());
  const double r = 1.0 / (1.0 + std::exp(2.0 * ho.tau));
  return {h.b.point() * (1.0 - r), r};
}

bool horocycle_membership(const DiskPoint& z, const HorocycleParam& h, const DiskPoint& x,
                          double tol) {
  return std::abs(composite_distance(x, z, h.b) - h.tau) < tol;
}

ReferencedHorocycle horocycle_group_action(const SU11Element& g, const HorocycleParam& h,
                                           const DiskPoint& x) {
  return {HorocycleParam{boundary_action(g, h.b), h.tau}, mobius(g, x)};
}

HorocycleParam rereference_horocycle(const HorocycleParam& h, const DiskPoint& from_x,
                                     const DiskPoint& to_y) {
  return {h.b, h.tau + composite_distance(to_y, from_x, h.b)};
}

double boundary_density(const DiskPoint& x, const BoundaryPoint& b) {
  return std::exp(2.0 * composite_distance(DiskPoint::origin(), x, b));
}

cd integrate_boundary(const std::function<cd(const BoundaryPoint&)>& F, int nodes) {
  num::CompensatedComplexSum acc;
  for (int k = 0; k < nodes; ++k) acc.add(F(BoundaryPoint(kTwoPi * k / nodes)));
  return acc.value() / static_cast<double>(nodes);
}

}  // namespace horo::disk
