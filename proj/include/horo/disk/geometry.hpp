#pragma once

#include <complex>
#include <functional>

#include "horo/lie/su11.hpp"

namespace horo::disk {

using cd = std::complex<double>;
using lie::SU11Element;

class DiskPoint {
 public:
  // Rejects |z| >= 1 - 1e-12.
  explicit DiskPoint(cd z);
  static DiskPoint origin() { return DiskPoint(cd(0.0)); }
  cd z() const { return z_; }

 private:
  cd z_;
};

// b = e^{i beta}, beta in [0, 2 pi).
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double beta);
  double beta() const { return beta_; }
  cd point() const { return std::polar(1.0, beta_); }
  // k_{beta/2}, a K-representative of b.
  SU11Element representative() const { return SU11Element::rotation(0.5 * beta_); }

 private:
  double beta_;
};

struct HorocycleParam {
  BoundaryPoint b{0.0};
  double tau = 0.0;
};

struct EuclideanCircle {
  cd center;
  double radius = 0.0;
  double tangency_defect() const { return std::abs(std::abs(center) + radius - 1.0); }
};

double normalize_angle(double beta);

DiskPoint mobius(const SU11Element& g, const DiskPoint& x);
BoundaryPoint mobius(const SU11Element& g, const BoundaryPoint& b);

double distance_to_origin(const DiskPoint& x);
double distance(const DiskPoint& x, const DiskPoint& y);

struct NACoordinates {
  double s = 0.0;
  double t = 0.0;
};
NACoordinates na_coordinates(const DiskPoint& x);
DiskPoint from_na(double s, double t);  // n_s a_t [o]

// s_o(x) = n_s a_t with s_o(x)[o] = x.
SU11Element borel_section(const DiskPoint& x);
// kappa_x(k) = s_o(x) kappa_o(s_o(x)^{-1} k) s_o(x)^{-1}
SU11Element kappa(const DiskPoint& x, const SU11Element& k);

double composite_distance(const DiskPoint& x, const DiskPoint& y, const BoundaryPoint& b);
// Reference point o.
double composite_distance(const DiskPoint& y, const BoundaryPoint& b);
// Closed-form Poisson expression, for diagnostics only.
double poisson_composite_distance(const DiskPoint& y, const BoundaryPoint& b);

// g<b> = kappa_o(g k)M
BoundaryPoint boundary_action(const SU11Element& g, const BoundaryPoint& b);

EuclideanCircle horocycle_circle(const HorocycleParam& h, const DiskPoint& x);
// kappa_x(k) a_tau n_s [x]
DiskPoint horocycle_point(const HorocycleParam& h, const DiskPoint& x, double s);
bool horocycle_membership(const DiskPoint& z, const HorocycleParam& h, const DiskPoint& x,
                          double tol = 1e-9);

struct ReferencedHorocycle {
  HorocycleParam h;
  DiskPoint reference;
};
ReferencedHorocycle horocycle_group_action(const SU11Element& g, const HorocycleParam& h,
                                           const DiskPoint& x);
HorocycleParam rereference_horocycle(const HorocycleParam& h, const DiskPoint& from_x,
                                     const DiskPoint& to_y);

// d nu^x / d nu^o (b) = e^{2 A_o(x, b)}
double boundary_density(const DiskPoint& x, const BoundaryPoint& b);

// Trapezoid rule for the normalized arc measure nu^o.
cd integrate_boundary(const std::function<cd(const BoundaryPoint&)>& F, int nodes);

}  // namespace horo::disk
