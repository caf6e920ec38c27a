#include "horo/transforms/types.hpp"

#include <cmath>
#include <numbers>

#include "horo/errors.hpp"

namespace horo::tr {

void TransformGrids::validate() const {
  if (n_beta < 2) throw ConfigError("beta grid needs at least two nodes");
  tau.validate();
  lambda.validate();
  if (!lambda.staggered) throw ConfigError("lambda grid must be staggered");
  if (std::abs(lambda.lo + lambda.hi) > 1e-12 * (lambda.hi - lambda.lo))
    throw ConfigError("lambda grid must be symmetric about 0");
  horocycle.validate();
  area.validate();
  if (!(area_panel_scale > 0.0)) throw ConfigError("area panel scale must be positive");
}

TransformGrids TransformGrids::doubled() const {
  TransformGrids g = *this;
  g.n_beta *= 2;
  g.tau = tau.doubled();
  g.lambda = lambda.doubled();
  return g;
}

double TransformGrids::lambda_max() const { return std::max(std::abs(lambda.lo), lambda.hi); }

double beta_node(int i, int n_beta) { return 2.0 * std::numbers::pi * i / n_beta; }

HorocycleFunction::HorocycleFunction(int n_beta_, num::LineGrid tau_)
    : n_beta(n_beta_), tau(tau_), samples(static_cast<std::size_t>(n_beta_) * tau_.n) {}

SpectralFunction::SpectralFunction(int n_beta_, num::LineGrid lambda_)
    : n_beta(n_beta_), lambda(lambda_), samples(static_cast<std::size_t>(n_beta_) * lambda_.n) {}

namespace {

double xi_energy(const HorocycleFunction& F, const HorocycleFunction* G,
                 const MeasureNormalization& norm) {
  double acc = 0.0;
  for (int i = 0; i < F.n_beta; ++i) {
    double row = 0.0;
    for (int k = 0; k < F.tau.n; ++k) {
      const cd v = G ? F.at(i, k) - G->at(i, k) : F.at(i, k);
      row += std::norm(v) * std::exp(2.0 * F.tau.node(k));
    }
    acc += row;
  }
  return acc * norm.c_A * F.tau.step() / F.n_beta;
}

double spectral_energy(const SpectralFunction& S, const SpectralFunction* T,
                       const MeasureNormalization& norm) {
  double acc = 0.0;
  for (int i = 0; i < S.n_beta; ++i) {
    double row = 0.0;
    for (int j = 0; j < S.lambda.n; ++j) row += std::norm(T ? S.at(i, j) - T->at(i, j) : S.at(i, j));
    acc += row;
  }
  return acc * S.lambda.step() / (2.0 * std::numbers::pi * norm.c_A) / S.n_beta;
}

}  // namespace

double norm_xi(const HorocycleFunction& F, const MeasureNormalization& norm) {
  return std::sqrt(xi_energy(F, nullptr, norm));
}

double norm_spectral(const SpectralFunction& S, const MeasureNormalization& norm) {
  return std::sqrt(spectral_energy(S, nullptr, norm));
}

double relative_xi_distance(const HorocycleFunction& F, const HorocycleFunction& G,
                            const MeasureNormalization& norm) {
  if (F.n_beta != G.n_beta || !(F.tau == G.tau)) throw DomainViolation("grid mismatch");
  return std::sqrt(xi_energy(F, &G, norm) / xi_energy(G, nullptr, norm));
}

double relative_spectral_distance(const SpectralFunction& S, const SpectralFunction& T,
                                  const MeasureNormalization& norm) {
  if (S.n_beta != T.n_beta || !(S.lambda == T.lambda)) throw DomainViolation("grid mismatch");
  return std::sqrt(spectral_energy(S, &T, norm) / spectral_energy(T, nullptr, norm));
}

}  // namespace horo::tr
