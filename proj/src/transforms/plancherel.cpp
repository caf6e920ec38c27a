#include "horo/transforms/plancherel.hpp"

#include <numbers>

#include "horo/numerics/quadrature.hpp"
#include "horo/transforms/cfunction.hpp"
#include "horo/transforms/helgason.hpp"

namespace horo::tr {

cd plancherel_spectral(const SpectralFunction& H1, const SpectralFunction& H2,
                       const MeasureNormalization& norm) {
  const double dl = H1.lambda.step() / (2.0 * std::numbers::pi * norm.c_A);
  num::CompensatedComplexSum acc;
  for (int i = 0; i < H1.n_beta; ++i)
    for (int j = 0; j < H1.lambda.n; ++j) {
      const double density = c_abs_sq_inv(H1.lambda.node(j)) / kWeylOrder;
      acc.add(density * H1.at(i, j) * std::conj(H2.at(i, j)));
    }
  return acc.value() * dl / static_cast<double>(H1.n_beta) / norm.kappa;
}

PlancherelPair plancherel_pair(const TestFunction& f1, const TestFunction& f2,
                               const MeasureNormalization& norm, const TransformGrids& grids) {
  PlancherelPair p;
  p.lhs = inner_product_x(f1, f2, norm, grids);
  p.rhs = plancherel_spectral(helgason_grid(f1, norm, grids), helgason_grid(f2, norm, grids), norm);
  return p;
}

double measure_kappa(const TestFunction& f, const MeasureNormalization& norm,
                     const TransformGrids& grids) {
  MeasureNormalization raw = norm;
  raw.kappa = 1.0;
  const SpectralFunction H = helgason_grid(f, raw, grids);
  return plancherel_spectral(H, H, raw).real() / inner_product_x(f, f, raw, grids).real();
}

}  // namespace horo::tr
