#pragma once

#include <vector>

#include "horo/transforms/test_function.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

// (I x F) Psi*_o F on the given lambda grid.
SpectralFunction phi_o(const HorocycleFunction& F, const MeasureNormalization& norm,
                       const num::LineGrid& lambda);
// Inverse of phi_o, sampled on tau_out.
HorocycleFunction phi_o_inverse(const SpectralFunction& S, const MeasureNormalization& norm,
                                const num::LineGrid& tau_out);

// Pointwise multiplication by 1 / (sqrt(w) |c(lambda)|).
SpectralFunction lambda_multiplier(const SpectralFunction& S);

// Lambda applied to F: phi_o, multiplier, inverse onto tau_out.
HorocycleFunction apply_lambda(const HorocycleFunction& F, const MeasureNormalization& norm,
                               const num::LineGrid& lambda, const num::LineGrid& tau_out);

// Qf = Lambda R f (with the kappa^{-1/2} calibration), sampled on grids.output_tau().
HorocycleFunction q_operator(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids);
HorocycleFunction q_operator_from_radon(const HorocycleFunction& radon_samples,
                                        const MeasureNormalization& norm,
                                        const TransformGrids& grids);

// Evaluates Qf at an arbitrary boundary angle and arbitrary taus, from the
// Radon column of f at that angle.
std::vector<cd> q_column(const TestFunction& f, double beta, std::span<const double> taus,
                         const MeasureNormalization& norm, const TransformGrids& grids);

}  // namespace horo::tr
