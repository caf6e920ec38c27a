#pragma once

#include <vector>

#include "horo/transforms/types.hpp"
#include "horo/disk/geometry.hpp"

namespace horo::tr {

// max over probes x and lambda > 0 of |I(x, l) - I(x, -l)| / max |I|, where
// I(x, l) = int e^{(1 + i l) A_o(x, b)} S(b, l) dnu^o(b).
double property_sharp_defect(const SpectralFunction& S, const std::vector<disk::DiskPoint>& probes,
                             const MeasureNormalization& norm);

// Same defect for J(x, l) = int (I x F) Psi*_x F (b, l) dnu^x(b), with the
// transported spectrum e^{-(1 - i l) A_o(x, b)} phi_o F (b, l).
double property_flat_defect(const HorocycleFunction& F, const std::vector<disk::DiskPoint>& probes,
                            const MeasureNormalization& norm, const num::LineGrid& lambda);

// A beta-independent profile that is odd in lambda.
SpectralFunction odd_profile(int n_beta, const num::LineGrid& lambda);

std::vector<disk::DiskPoint> default_probes();

}  // namespace horo::tr
