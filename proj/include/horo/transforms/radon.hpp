#pragma once

#include <span>
#include <vector>

#include "horo/transforms/test_function.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

using disk::BoundaryPoint;
using disk::HorocycleParam;

// c_N int f(k a_tau n_s [o]) ds, with h referenced at o.
cd radon(const TestFunction& f, const HorocycleParam& h, const MeasureNormalization& norm,
         const num::QuadratureSpec& quad);
// Value of Rf in the Psi_x parametrization.
cd radon_at_reference(const TestFunction& f, const HorocycleParam& h, const DiskPoint& x,
                      const MeasureNormalization& norm, const num::QuadratureSpec& quad);
// e^{tau} Rf
cd abel(const TestFunction& f, const HorocycleParam& h, const MeasureNormalization& norm,
        const num::QuadratureSpec& quad);

// Rf on the (beta, tau) grid of `grids`.
HorocycleFunction radon_grid(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids);
// Rf(beta, tau_k) for the given taus.
std::vector<cd> radon_column(const TestFunction& f, double beta, std::span<const double> taus,
                             const MeasureNormalization& norm, const num::QuadratureSpec& quad);

namespace serial {
HorocycleFunction radon_grid(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids);
}

}  // namespace horo::tr
