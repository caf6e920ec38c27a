#include "horo/transforms/intertwining.hpp"

#include "horo/disk/geometry.hpp"
#include "horo/transforms/radon.hpp"
#include "horo/transforms/spectral.hpp"

namespace horo::tr {

HorocycleFunction transported(const lie::SU11Element& g, const ColumnEvaluator& F, int n_beta,
                              const num::LineGrid& tau) {
  HorocycleFunction out(n_beta, tau);
  const lie::SU11Element ginv = g.inverse();
  const disk::DiskPoint moved_origin = disk::mobius(ginv, disk::DiskPoint::origin());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n_beta; ++i) {
    try {
      const disk::BoundaryPoint b = disk::boundary_action(ginv, disk::BoundaryPoint(out.beta(i)));
      const double shift = disk::composite_distance(moved_origin, b);
      std::vector<double> taus(tau.n);
      for (int k = 0; k < tau.n; ++k) taus[k] = tau.node(k) + shift;
      const auto col = F(b.beta(), taus);
      for (int k = 0; k < tau.n; ++k) out.at(i, k) = col[k];
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ColumnEvaluator radon_evaluator(const TestFunction& f, const MeasureNormalization& norm,
                                const TransformGrids& grids) {
  return [f, norm, quad = grids.horocycle](double beta, std::span<const double> taus) {
    return radon_column(f, beta, taus, norm, quad);
  };
}

ColumnEvaluator q_evaluator(const TestFunction& f, const MeasureNormalization& norm,
                            const TransformGrids& grids) {
  return [f, norm, grids](double beta, std::span<const double> taus) {
    return q_column(f, beta, taus, norm, grids);
  };
}

}  // namespace horo::tr
