#include "horo/transforms/measures.hpp"

#include <cmath>
#include <numbers>

#include "horo/lie/su11.hpp"
#include "horo/transforms/plancherel.hpp"
#include "horo/transforms/test_function.hpp"

namespace horo::tr {

num::QuadratureSpec default_nbar_spec() {
  return num::QuadratureSpec{num::Rule::GaussLegendre, 256, 8, 26.0, 1e-10};
}

double calibrate_c_N(const num::QuadratureSpec& spec) {
  auto integrand = [](double u) -> cd {
    const double s = std::sinh(u);
    // Cartan involution theta(g) = (g^*)^{-1} sends (a, b) to (a, -b).
    const lie::SU11Element n = lie::SU11Element::shear(s);
    const double H = lie::iwasawa_kan(lie::SU11Element(n.a(), -n.b())).t;
    return std::exp(-2.0 * H) * std::cosh(u);
  };
  const auto r = num::integrate_1d(integrand, spec);
  return 1.0 / r.value.real();
}

double killing_norm_H0() {
  const auto basis = lie::su11_basis();
  return std::sqrt(lie::killing_form(basis[0], basis[0]));
}

double calibrate_c_A() { return killing_norm_H0() / std::sqrt(2.0 * std::numbers::pi); }

Calibration calibrate_measures(const num::QuadratureSpec& nbar, const TransformGrids& grids,
                               bool with_refinement) {
  Calibration c;
  c.norm.c_N = calibrate_c_N(nbar);
  if (with_refinement)
    c.c_N_refinement_delta = std::abs(c.norm.c_N - calibrate_c_N(nbar.refined()));
  c.norm.c_A = calibrate_c_A();
  c.norm.kappa = 1.0;
  const TestFunction ref = reference_bump();
  c.norm.kappa = measure_kappa(ref, c.norm, grids);
  if (with_refinement)
    c.kappa_refinement_delta =
        std::abs(c.norm.kappa - measure_kappa(ref, c.norm, grids.doubled()));
  return c;
}

}  // namespace horo::tr
