#pragma once

#include "horo/transforms/types.hpp"

namespace horo::tr {

// u-truncation for the N-bar normalization integral in s = sinh(u).
num::QuadratureSpec default_nbar_spec();

// c_N from int e^{-2 rho(H(nbar_s))} c_N ds = 1, with H from the Iwasawa
// decomposition of the Cartan-involution image of n_s.
double calibrate_c_N(const num::QuadratureSpec& spec);
double killing_norm_H0();
double calibrate_c_A();

struct Calibration {
  MeasureNormalization norm;
  double c_N_refinement_delta = 0.0;  // |c_N(spec) - c_N(refined spec)|
  double kappa_refinement_delta = 0.0;
};

// kappa is measured on the reference bump; refinement deltas are computed
// only when requested.
Calibration calibrate_measures(const num::QuadratureSpec& nbar, const TransformGrids& grids,
                               bool with_refinement = false);

}  // namespace horo::tr
