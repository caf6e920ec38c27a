#pragma once

#include <functional>
#include <span>
#include <vector>

#include "horo/lie/su11.hpp"
#include "horo/transforms/test_function.hpp"
#include "horo/transforms/types.hpp"

namespace horo::tr {

// Values of a horocycle function at one boundary angle and several taus
// (referenced at o).
using ColumnEvaluator = std::function<std::vector<cd>(double beta, std::span<const double> taus)>;

// (pi_hat(g) F)(beta, tau) = F(g^{-1}<beta>, tau + A_o(g^{-1}[o], g^{-1}<beta>)), sampled
// on n_beta boundary nodes and the tau grid.
HorocycleFunction transported(const lie::SU11Element& g, const ColumnEvaluator& F, int n_beta,
                              const num::LineGrid& tau);

ColumnEvaluator radon_evaluator(const TestFunction& f, const MeasureNormalization& norm,
                                const TransformGrids& grids);
ColumnEvaluator q_evaluator(const TestFunction& f, const MeasureNormalization& norm,
                            const TransformGrids& grids);

}  // namespace horo::tr
