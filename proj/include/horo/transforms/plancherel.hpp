#pragma once

#include "horo/transforms/test_function.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

struct PlancherelPair {
  cd lhs;  // int f1 conj(f2) dx
  cd rhs;  // int int Hf1 conj(Hf2) dnu^o dlambda / (w |c|^2), divided by kappa
};

// Spectral side from precomputed transforms.
cd plancherel_spectral(const SpectralFunction& H1, const SpectralFunction& H2,
                       const MeasureNormalization& norm);

PlancherelPair plancherel_pair(const TestFunction& f1, const TestFunction& f2,
                               const MeasureNormalization& norm, const TransformGrids& grids);

// Ratio of the uncalibrated spectral side to the spatial side for f1 = f2 = f.
double measure_kappa(const TestFunction& f, const MeasureNormalization& norm,
                     const TransformGrids& grids);

}  // namespace horo::tr
