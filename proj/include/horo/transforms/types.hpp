#pragma once

#include <complex>
#include <span>
#include <vector>

#include "horo/numerics/fourier.hpp"
#include "horo/numerics/quadrature.hpp"

namespace horo::tr {

using cd = std::complex<double>;

struct MeasureNormalization {
  double c_N = 0.0;
  double c_A = 0.0;
  double kappa = 1.0;
};

constexpr double kWeylOrder = 2.0;

// Discretization choices shared by all transforms.
struct TransformGrids {
  int n_beta = 256;
  num::LineGrid tau{-8.0, 8.0, 512, false};
  num::LineGrid lambda{-24.0, 24.0, 512, true};
  // Chord rule along each horocycle (panels over the support chord).
  num::QuadratureSpec horocycle{num::Rule::GaussLegendre, 12, 8, 1.0, 1e-12};
  // Area rule: panels per axis are chosen so no panel is wider than
  // area_panel_scale / lambda_max (and at least area.panels).
  num::QuadratureSpec area{num::Rule::GaussLegendre, 8, 8, 1.0, 1e-12};
  double area_panel_scale = 9.0;

  void validate() const;
  // Twice the beta, tau and lambda nodes over the same ranges.
  TransformGrids doubled() const;
  // tau grid conjugate to the lambda grid; output grid of the unitarized operator.
  num::LineGrid output_tau() const { return num::LineGrid::conjugate_of(lambda); }
  double lambda_max() const;
};

double beta_node(int i, int n_beta);

// Samples on (beta_i, tau_k), row-major in beta.
struct HorocycleFunction {
  int n_beta = 0;
  num::LineGrid tau;
  std::vector<cd> samples;

  HorocycleFunction() = default;
  HorocycleFunction(int n_beta_, num::LineGrid tau_);
  double beta(int i) const { return beta_node(i, n_beta); }
  cd& at(int i, int k) { return samples[static_cast<std::size_t>(i) * tau.n + k]; }
  cd at(int i, int k) const { return samples[static_cast<std::size_t>(i) * tau.n + k]; }
  std::span<const cd> row(int i) const {
    return {samples.data() + static_cast<std::size_t>(i) * tau.n, static_cast<std::size_t>(tau.n)};
  }
};

// Samples on (beta_i, lambda_j), row-major in beta.
struct SpectralFunction {
  int n_beta = 0;
  num::LineGrid lambda;
  std::vector<cd> samples;

  SpectralFunction() = default;
  SpectralFunction(int n_beta_, num::LineGrid lambda_);
  double beta(int i) const { return beta_node(i, n_beta); }
  cd& at(int i, int j) { return samples[static_cast<std::size_t>(i) * lambda.n + j]; }
  cd at(int i, int j) const { return samples[static_cast<std::size_t>(i) * lambda.n + j]; }
  std::span<const cd> row(int i) const {
    return {samples.data() + static_cast<std::size_t>(i) * lambda.n,
            static_cast<std::size_t>(lambda.n)};
  }
};

// L2(Xi) norm: int int |F|^2 e^{2 tau} dnu^o c_A dtau.
double norm_xi(const HorocycleFunction& F, const MeasureNormalization& norm);
// L2(nu^o x dlambda) norm with dlambda = dl / (2 pi c_A).
double norm_spectral(const SpectralFunction& S, const MeasureNormalization& norm);
double relative_xi_distance(const HorocycleFunction& F, const HorocycleFunction& G,
                            const MeasureNormalization& norm);
double relative_spectral_distance(const SpectralFunction& S, const SpectralFunction& T,
                                  const MeasureNormalization& norm);

}  // namespace horo::tr
