#include "horo/transforms/spectral.hpp"

#include <cmath>

#include "horo/transforms/cfunction.hpp"
#include "horo/transforms/radon.hpp"

namespace horo::tr {

namespace {

std::vector<cd> abel_row(std::span<const cd> row, const num::LineGrid& tau) {
  std::vector<cd> out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) out[k] = std::exp(tau.node(static_cast<int>(k))) * row[k];
  return out;
}

}  // namespace

SpectralFunction phi_o(const HorocycleFunction& F, const MeasureNormalization& norm,
                       const num::LineGrid& lambda) {
  const num::FourierPair pair(F.tau, lambda, norm.c_A);
  SpectralFunction S(F.n_beta, lambda);
  const int nb = F.n_beta;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nb; ++i) {
    const auto spec = pair.forward(abel_row(F.row(i), F.tau));
    std::copy(spec.begin(), spec.end(), S.samples.begin() + static_cast<std::ptrdiff_t>(i) * lambda.n);
  }
  return S;
}

HorocycleFunction phi_o_inverse(const SpectralFunction& S, const MeasureNormalization& norm,
                                const num::LineGrid& tau_out) {
  // The tau grid of the pair only fixes the forward direction; any valid grid works.
  const num::FourierPair pair(tau_out, S.lambda, norm.c_A);
  HorocycleFunction F(S.n_beta, tau_out);
  const int nb = S.n_beta;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nb; ++i) {
    const auto col = pair.inverse(S.row(i), tau_out);
    for (int k = 0; k < tau_out.n; ++k) F.at(i, k) = std::exp(-tau_out.node(k)) * col[k];
  }
  return F;
}

SpectralFunction lambda_multiplier(const SpectralFunction& S) {
  SpectralFunction out = S;
  for (int j = 0; j < S.lambda.n; ++j) {
    const double m = lambda_multiplier_value(S.lambda.node(j));
    for (int i = 0; i < S.n_beta; ++i) out.at(i, j) *= m;
  }
  return out;
}

HorocycleFunction apply_lambda(const HorocycleFunction& F, const MeasureNormalization& norm,
                               const num::LineGrid& lambda, const num::LineGrid& tau_out) {
  return phi_o_inverse(lambda_multiplier(phi_o(F, norm, lambda)), norm, tau_out);
}

HorocycleFunction q_operator_from_radon(const HorocycleFunction& radon_samples,
                                        const MeasureNormalization& norm,
                                        const TransformGrids& grids) {
  HorocycleFunction Q = apply_lambda(radon_samples, norm, grids.lambda, grids.output_tau());
  const double scale = 1.0 / std::sqrt(norm.kappa);
  for (auto& v : Q.samples) v *= scale;
  return Q;
}

HorocycleFunction q_operator(const TestFunction& f, const MeasureNormalization& norm,
                             const TransformGrids& grids) {
  return q_operator_from_radon(radon_grid(f, norm, grids), norm, grids);
}

std::vector<cd> q_column(const TestFunction& f, double beta, std::span<const double> taus,
                         const MeasureNormalization& norm, const TransformGrids& grids) {
  const std::vector<double> tau_in = grids.tau.nodes();
  const auto col = radon_column(f, beta, tau_in, norm, grids.horocycle);
  const num::FourierPair pair(grids.tau, grids.lambda, norm.c_A);
  auto spec = pair.forward(abel_row(col, grids.tau));
  const double scale = 1.0 / std::sqrt(norm.kappa);
  for (int j = 0; j < grids.lambda.n; ++j)
    spec[j] *= scale * lambda_multiplier_value(grids.lambda.node(j));
  std::vector<cd> out(taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k)
    out[k] = std::exp(-taus[k]) * pair.inverse_at(spec, taus[k]);
  return out;
}

}  // namespace horo::tr
