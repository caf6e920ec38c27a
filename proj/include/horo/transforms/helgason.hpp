#pragma once

#include <vector>

#include "horo/transforms/test_function.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

// Nodes and weights for integrals against dx over the support ball of f.
// Points are k s_o(k^{-1}[c]) n_s a_t [o] with s = e^t sinh(u) and k the
// representative of e^{i beta}; weights carry c_N c_A e^{-t} cosh(u) du dt.
// Nodes sharing a t lie on one horocycle with normal e^{i beta} and are stored
// contiguously, row r spanning [row_start[r], row_start[r + 1]).
struct AreaNodes {
  std::vector<cd> z;
  std::vector<double> w;
  std::vector<std::size_t> row_start;
  std::size_t size() const { return z.size(); }
};

// t-panels are at most max_panel_width wide, u-panels at most 0.5.
AreaNodes area_nodes(const TestFunction& f, const MeasureNormalization& norm,
                     const num::QuadratureSpec& area, double max_panel_width, double beta = 0.0);
AreaNodes area_nodes(const TestFunction& f, const MeasureNormalization& norm,
                     const TransformGrids& grids, double beta = 0.0);

// int f1 conj(f2) dx over the support of f1.
cd inner_product_x(const TestFunction& f1, const TestFunction& f2,
                   const MeasureNormalization& norm, const TransformGrids& grids);
double norm_x(const TestFunction& f, const MeasureNormalization& norm, const TransformGrids& grids);

cd helgason_fourier(const TestFunction& f, const disk::BoundaryPoint& b, double lambda,
                    const MeasureNormalization& norm, const TransformGrids& grids);

SpectralFunction helgason_grid(const TestFunction& f, const MeasureNormalization& norm,
                               const TransformGrids& grids);

namespace serial {
// Direct evaluation of every exponential; reference for the recurrence kernel.
SpectralFunction helgason_grid(const TestFunction& f, const MeasureNormalization& norm,
                               const TransformGrids& grids);
}

}  // namespace horo::tr
