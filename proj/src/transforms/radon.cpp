#include "horo/transforms/radon.hpp"

#include <cmath>

#include "horo/errors.hpp"

namespace horo::tr {

namespace {

constexpr cd kI(0.0, 1.0);

// Integral of f along Psi_o(beta, tau), parametrized around the point nearest
// to the support center: s = s_c + sqrt(v_c / V) sinh(x), where
// cosh 2d(c, point) = C0 + cosh 2x - 1.
cd horocycle_integral(const TestFunction& f, double beta, double tau,
                      const num::QuadratureSpec& quad) {
  const cd rot = std::polar(1.0, beta);
  const cd c = std::conj(rot) * f.center().z();
  const cd wc = kI * (1.0 + c) / (1.0 - c);
  const double u_c = wc.real(), v_c = wc.imag();
  const double V = std::exp(2.0 * tau);
  const double c0 = 1.0 + (V - v_c) * (V - v_c) / (2.0 * V * v_c);
  const double reach = std::cosh(2.0 * f.support_radius()) - c0 + 1.0;
  if (!(reach > 1.0)) return 0.0;
  const double x_max = 0.5 * std::acosh(reach);
  const double s_c = u_c / (2.0 * V);
  const double scale = std::sqrt(v_c / V);

  auto point = [&](double x) {
    const double s = s_c + scale * std::sinh(x);
    const cd w(2.0 * s * V, V);
    return rot * (w - kI) / (w + kI);
  };
  auto value = [&](double x) -> cd {
    const cd z = point(x);
    if (!(std::norm(z) < 1.0)) return 0.0;
    return f.at(z);
  };

  const double edge = std::max(std::abs(value(-x_max)), std::abs(value(x_max)));
  if (edge > quad.tail_tolerance)
    throw QuadratureUnderresolved("function does not decay along the horocycle chord");

  const num::NodeSet nodes = num::composite_nodes(-x_max, x_max, quad.panels,
                                                  quad.points_per_panel, quad.rule);
  num::CompensatedComplexSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes.x[i];
    acc.add(nodes.w[i] * scale * std::cosh(x) * value(x));
  }
  return acc.value();
}

}  // namespace

cd radon(const TestFunction& f, const HorocycleParam& h, const MeasureNormalization& norm,
         const num::QuadratureSpec& quad) {
  return norm.c_N * horocycle_integral(f, h.b.beta(), h.tau, quad);
}

cd radon_at_reference(const TestFunction& f, const HorocycleParam& h, const DiskPoint& x,
                      const MeasureNormalization& norm, const num::QuadratureSpec& quad) {
  const HorocycleParam shifted{h.b, h.tau + disk::composite_distance(x, h.b)};
  return radon(f, shifted, norm, quad);
}

cd abel(const TestFunction& f, const HorocycleParam& h, const MeasureNormalization& norm,
        const num::QuadratureSpec& quad) {
  return std::exp(h.tau) * radon(f, h, norm, quad);
}

std::vector<cd> radon_column(const TestFunction& f, double beta, std::span<const double> taus,
                             const MeasureNormalization& norm, const num::QuadratureSpec& quad) {
  std::vector<cd> out(taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k)
    out[k] = norm.c_N * horocycle_integral(f, beta, taus[k], quad);
  return out;
}

HorocycleFunction radon_grid(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids) {
  HorocycleFunction F(grids.n_beta, grids.tau);
  const std::vector<double> taus = grids.tau.nodes();
  const int nb = grids.n_beta;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < nb; ++i) {
    try {
      const auto col = radon_column(f, F.beta(i), taus, norm, grids.horocycle);
      std::copy(col.begin(), col.end(), F.samples.begin() + static_cast<std::ptrdiff_t>(i) * F.tau.n);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return F;
}

namespace serial {

HorocycleFunction radon_grid(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids) {
  HorocycleFunction F(grids.n_beta, grids.tau);
  for (int i = 0; i < grids.n_beta; ++i)
    for (int k = 0; k < grids.tau.n; ++k)
      F.at(i, k) = radon(f, HorocycleParam{BoundaryPoint(F.beta(i)), grids.tau.node(k)}, norm,
                         grids.horocycle);
  return F;
}

}  // namespace serial

}  // namespace horo::tr
