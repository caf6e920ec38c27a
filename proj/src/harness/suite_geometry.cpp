#include <numbers>

#include "horo/disk/geometry.hpp"
#include "suite_common.hpp"

namespace horo::harness::detail {

namespace {

using disk::BoundaryPoint;
using disk::cd;
using disk::DiskPoint;
using disk::HorocycleParam;
using lie::SU11Element;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sampler {
  std::mt19937_64& rng;
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  double uniform(double a, double b) { return a + (b - a) * unit(rng); }
  DiskPoint point(double max_dist = 1.5) {
    return DiskPoint(std::polar(std::tanh(uniform(0.0, max_dist)), uniform(0.0, kTwoPi)));
  }
  BoundaryPoint boundary() { return BoundaryPoint(uniform(0.0, kTwoPi)); }
  SU11Element group() {
    return SU11Element::rotation(uniform(0.0, kTwoPi)) * SU11Element::boost(uniform(-1.0, 1.0)) *
           SU11Element::shear(uniform(-1.0, 1.0));
  }
};

double angle_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Trigonometric polynomial on the boundary.
struct TrigPoly {
  std::vector<cd> coef;  // frequencies -3..3
  cd operator()(const BoundaryPoint& b) const {
    cd acc = 0.0;
    for (int m = -3; m <= 3; ++m) acc += coef[m + 3] * std::polar(1.0, m * b.beta());
    return acc;
  }
};

TrigPoly random_poly(Sampler& s) {
  TrigPoly p;
  for (int m = -3; m <= 3; ++m) p.coef.push_back(cd(s.uniform(-1, 1), s.uniform(-1, 1)));
  return p;
}

}  // namespace

VerificationReport geometry_suite(const RunConfig& config) {
  VerificationReport rep;
  auto rng = suite_rng(config, 2);
  Sampler S{rng};
  const DiskPoint o = DiskPoint::origin();

  // Mobius action.
  {
    double law = 0, dist = 0;
    for (int k = 0; k < 100; ++k) {
      const SU11Element g = S.group(), h = S.group();
      const DiskPoint z = S.point(), w = S.point();
      law = std::max(law, std::abs(disk::mobius(g, disk::mobius(h, z)).z() - disk::mobius(g * h, z).z()));
      dist = std::max(dist, std::abs(disk::distance(disk::mobius(g, z), disk::mobius(g, w)) -
                                     disk::distance(z, w)));
    }
    rep.add("geometry.mobius.group_law", "mobius-action", law, 0, law, 1e-12);
    rep.add("geometry.mobius.isometry", "mobius-action", dist, 0, dist, 1e-10);
    const double at = std::abs(disk::mobius(SU11Element::boost(0.8), o).z() - std::tanh(0.8));
    rep.add("geometry.mobius.boost_of_origin", "mobius-action", at, 0, at, 1e-15);
    const double n1 = std::abs(disk::mobius(SU11Element::shear(1.0), o).z() - cd(0.5, -0.5));
    rep.add("geometry.mobius.shear_of_origin", "mobius-action", n1, 0, n1, 1e-15);
  }

  // Borel section.
  {
    double img = 0, theta = 0;
    for (int k = 0; k < 100; ++k) {
      const DiskPoint x = S.point();
      const SU11Element s = disk::borel_section(x);
      img = std::max(img, std::abs(disk::mobius(s, o).z() - x.z()));
      theta = std::max(theta, angle_gap(lie::iwasawa_kan(s).theta, 0.0));
    }
    rep.add("geometry.borel_section.image", "borel-section", img, 0, img, 1e-12);
    rep.add("geometry.borel_section.in_na", "borel-section", theta, 0, theta, 1e-12);
  }

  // Composite distance.
  guarded(rep, "geometry.composite_distance.cocycle", "cocycle", 1e-10, [&] {
    double cocycle = 0, anti = 0, fast = 0;
    for (int k = 0; k < 50; ++k) {
      const DiskPoint x = S.point(1.0), y = S.point(1.0), z = S.point(1.0);
      const BoundaryPoint b = S.boundary();
      cocycle = std::max(cocycle, std::abs(disk::composite_distance(x, y, b) -
                                           disk::composite_distance(x, z, b) -
                                           disk::composite_distance(z, y, b)));
      anti = std::max(anti, std::abs(disk::composite_distance(x, y, b) +
                                     disk::composite_distance(y, x, b)));
      fast = std::max(fast, std::abs(disk::composite_distance(o, y, b) -
                                     disk::composite_distance(y, b)));
    }
    rep.add("geometry.composite_distance.cocycle", "cocycle", cocycle, 0, cocycle, 1e-10);
    rep.add("geometry.composite_distance.antisymmetry", "cocycle", anti, 0, anti, 1e-10);
    rep.add("geometry.composite_distance.origin_fast_path", "composite-distance", fast, 0, fast, 1e-12);
  });
  {
    double inv = 0;
    for (int k = 0; k < 50; ++k) {
      const SU11Element g = S.group();
      const DiskPoint x = S.point(1.0), y = S.point(1.0);
      const BoundaryPoint b = S.boundary();
      inv = std::max(inv, std::abs(disk::composite_distance(x, y, b) -
                                   disk::composite_distance(disk::mobius(g, x), disk::mobius(g, y),
                                                            disk::boundary_action(g, b))));
    }
    rep.add("geometry.composite_distance.g_invariance", "g-invariance", inv, 0, inv, 1e-10);
    double ex = 0;
    for (double t : {-1.0, 0.3, 2.0})
      ex = std::max(ex, std::abs(disk::composite_distance(o, disk::mobius(SU11Element::boost(t), o),
                                                          BoundaryPoint(0.0)) - t));
    rep.add("geometry.composite_distance.boost_examples", "composite-distance", ex, 0, ex, 1e-12);
    double poisson = 0;
    for (int k = 0; k < 50; ++k) {
      const DiskPoint y = S.point(1.0);
      const BoundaryPoint b = S.boundary();
      poisson = std::max(poisson, std::abs(disk::composite_distance(o, y, b) -
                                           disk::poisson_composite_distance(y, b)));
    }
    rep.diagnose("geometry.composite_distance.poisson_discrepancy", poisson,
                 "max difference to the closed-form Poisson expression; informational");
  }

  // Boundary action.
  {
    double mob = 0, law = 0, fix = 0;
    for (int k = 0; k < 100; ++k) {
      const SU11Element g = S.group(), h = S.group();
      const BoundaryPoint b = S.boundary();
      mob = std::max(mob, angle_gap(disk::boundary_action(g, b).beta(), disk::mobius(g, b).beta()));
      law = std::max(law, angle_gap(disk::boundary_action(g, disk::boundary_action(h, b)).beta(),
                                    disk::boundary_action(g * h, b).beta()));
      const SU11Element an = SU11Element::boost(S.uniform(-2, 2)) * SU11Element::shear(S.uniform(-2, 2));
      fix = std::max(fix, angle_gap(disk::boundary_action(an, BoundaryPoint(0.0)).beta(), 0.0));
    }
    rep.add("geometry.boundary_action.matches_mobius", "boundary-action", mob, 0, mob, 1e-12);
    rep.add("geometry.boundary_action.group_law", "boundary-action", law, 0, law, 1e-12);
    rep.add("geometry.boundary_action.an_fixes_one", "boundary-action", fix, 0, fix, 1e-12);
    const double rot = angle_gap(disk::boundary_action(SU11Element::rotation(0.4), BoundaryPoint(0.0)).beta(), 0.8);
    rep.add("geometry.boundary_action.rotation_doubles_angle", "boundary-action", rot, 0, rot, 1e-14);
  }

  // kappa maps.
  {
    double ok = 0, xo = 0;
    for (int k = 0; k < 50; ++k) {
      const DiskPoint x = S.point(1.0);
      const double phi = S.uniform(0, kTwoPi);
      const SU11Element kx = disk::kappa(x, SU11Element::rotation(phi));
      ok = std::max(ok, angle_gap(2.0 * lie::iwasawa_kan(kx).theta, 2.0 * phi));
      // k' in K_x: kappa_x(kappa_o(k')) = k' up to M = {+-1}
      const SU11Element sx = disk::borel_section(x);
      const SU11Element kp = sx * SU11Element::rotation(S.uniform(0, kTwoPi)) * sx.inverse();
      const SU11Element back = disk::kappa(x, SU11Element::rotation(lie::iwasawa_kan(kp).theta));
      const double diff = std::min((back.matrix() - kp.matrix()).cwiseAbs().maxCoeff(),
                                   (back.matrix() + kp.matrix()).cwiseAbs().maxCoeff());
      xo = std::max(xo, diff);
    }
    rep.add("geometry.kappa.o_after_x", "kappa-maps", ok, 0, ok, 1e-10);
    rep.add("geometry.kappa.x_after_o", "kappa-maps", xo, 0, xo, 1e-10);
  }

  // Horocycles.
  {
    double worst = 0;
    for (int k = -200; k <= 200; ++k) {
      const cd p = disk::mobius(SU11Element::shear(0.05 * k), o).z();
      worst = std::max(worst, std::abs(std::abs(p - 0.5) - 0.5));
    }
    const auto circ = disk::horocycle_circle(HorocycleParam{BoundaryPoint(0.0), 0.0}, o);
    rep.add("geometry.horocycle.n_orbit_of_origin_on_circle_center_half_radius_half",
            "horocycle-circle", circ.radius, 0.5, std::max(worst, std::abs(circ.radius - 0.5) +
                                                                  std::abs(circ.center - 0.5)),
            1e-10);
    const auto opp = disk::horocycle_circle(HorocycleParam{BoundaryPoint(std::numbers::pi), 0.0}, o);
    rep.add("geometry.horocycle.opposite_normal", "horocycle-circle", opp.center.real(), -0.5,
            std::abs(opp.center + 0.5) + std::abs(opp.radius - 0.5), 1e-12);

    double tangency = 0, on_circle = 0, through = 0;
    for (int k = 0; k < 50; ++k) {
      const HorocycleParam h{S.boundary(), S.uniform(-1.5, 1.5)};
      const DiskPoint x = S.point(1.0);
      const auto c = disk::horocycle_circle(h, x);
      tangency = std::max(tangency, c.tangency_defect() + std::abs(c.center - (1.0 - c.radius) * h.b.point()));
      for (int j = -10; j <= 10; ++j) {
        const cd p = disk::horocycle_point(h, x, 0.3 * j).z();
        on_circle = std::max(on_circle, std::abs(std::abs(p - c.center) - c.radius));
      }
      const cd base = disk::mobius(disk::kappa(x, h.b.representative()) * SU11Element::boost(h.tau) *
                                       disk::borel_section(x), o).z();
      through = std::max(through, std::abs(std::abs(base - c.center) - c.radius));
    }
    rep.add("geometry.horocycle.circle_tangency", "horocycle-circle", tangency, 0, tangency, 1e-10);
    rep.add("geometry.horocycle.n_orbit_samples_on_circle", "horocycle-circle", on_circle, 0, on_circle, 1e-9);
    rep.add("geometry.horocycle.circle_through_base_point", "horocycle-circle", through, 0, through, 1e-9);

    double disagree = 0;
    for (int k = 0; k < 1000; ++k) {
      const HorocycleParam h{S.boundary(), S.uniform(-1.0, 1.0)};
      const DiskPoint x = S.point(0.8);
      DiskPoint z = disk::horocycle_point(h, x, S.uniform(-2, 2));
      if (k % 2 == 1) z = DiskPoint(z.z() * (1.0 + S.uniform(-1e-3, 1e-3)));
      const auto c = disk::horocycle_circle(h, x);
      const bool member = disk::horocycle_membership(z, h, x, 1e-9);
      // Euclidean circle test; near-misses have |A - tau| well above 1e-9.
      const bool on = std::abs(std::abs(z.z() - c.center) - c.radius) < 1e-9;
      if (member != on) disagree += 1;
    }
    rep.add("geometry.horocycle.membership_matches_circle", "horocycle-membership", disagree, 0, disagree, 0.0);

    double rr = 0, keep = 0, act = 0;
    for (int k = 0; k < 50; ++k) {
      const HorocycleParam h{S.boundary(), S.uniform(-1.0, 1.0)};
      const DiskPoint x = S.point(1.0), y = S.point(1.0);
      const auto hy = disk::rereference_horocycle(h, x, y);
      const auto back = disk::rereference_horocycle(hy, y, x);
      rr = std::max(rr, std::abs(back.tau - h.tau) + angle_gap(back.b.beta(), h.b.beta()));
      const SU11Element g = S.group();
      const auto moved = disk::horocycle_group_action(g, h, x);
      for (int j = 0; j < 20; ++j) {
        const DiskPoint p = disk::horocycle_point(h, x, S.uniform(-2, 2));
        keep = std::max(keep, std::abs(disk::composite_distance(y, p, hy.b) - hy.tau));
        act = std::max(act, std::abs(disk::composite_distance(moved.reference, disk::mobius(g, p),
                                                              moved.h.b) - moved.h.tau));
      }
    }
    rep.add("geometry.horocycle.rereference_round_trip", "horocycle-rereference", rr, 0, rr, 1e-12);
    rep.add("geometry.horocycle.rereference_preserves_points", "horocycle-rereference", keep, 0, keep, 1e-9);
    rep.add("geometry.horocycle.group_action_transports_points", "horocycle-action", act, 0, act, 1e-9);
    const DiskPoint shifted = disk::mobius(SU11Element::boost(0.7), o);
    const auto moved = disk::horocycle_group_action(SU11Element::boost(0.5), HorocycleParam{BoundaryPoint(0.0), 0.2}, o);
    const auto at_o = disk::rereference_horocycle(moved.h, moved.reference, o);
    const double m = std::abs(disk::composite_distance(o, shifted, at_o.b) - at_o.tau);
    rep.add("geometry.horocycle.boost_transport_example", "horocycle-action", at_o.tau, 0.7, m, 1e-9);
  }

  // Boundary measures.
  {
    constexpr int kNodes = 512;
    double mass = 0, quasi = 0, dual = 0;
    for (int k = 0; k < 20; ++k) {
      const DiskPoint x = S.point(0.8);
      const cd total = disk::integrate_boundary(
          [&](const BoundaryPoint& b) { return cd(disk::boundary_density(x, b)); }, kNodes);
      mass = std::max(mass, std::abs(total - 1.0));
      const SU11Element g = S.group();
      const SU11Element gi = g.inverse();
      const TrigPoly F = random_poly(S);
      const cd lhs = disk::integrate_boundary(
          [&](const BoundaryPoint& b) { return F(disk::boundary_action(gi, b)); }, kNodes);
      const cd rhs = disk::integrate_boundary(
          [&](const BoundaryPoint& b) {
            return F(b) * std::exp(-2.0 * lie::iwasawa_kan(g * b.representative()).t);
          },
          kNodes);
      quasi = std::max(quasi, std::abs(lhs - rhs));
      const DiskPoint gx = disk::mobius(gi, x);
      const cd dl = disk::integrate_boundary(
          [&](const BoundaryPoint& b) {
            return F(disk::boundary_action(gi, b)) * disk::boundary_density(x, b);
          },
          kNodes);
      const cd dr = disk::integrate_boundary(
          [&](const BoundaryPoint& b) { return F(b) * disk::boundary_density(gx, b); }, kNodes);
      dual = std::max(dual, std::abs(dl - dr));
    }
    rep.add("geometry.boundary_measure.total_mass", "boundary-density", mass, 0, mass, 1e-8);
    rep.add("geometry.boundary_measure.quasi_invariance", "quasi-invariance", quasi, 0, quasi, 1e-8);
    rep.add("geometry.boundary_measure.dual_relation", "dual-relation", dual, 0, dual, 1e-8);
  }
  return rep;
}

}  // namespace horo::harness::detail
