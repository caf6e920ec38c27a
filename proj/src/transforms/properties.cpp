#include "horo/transforms/properties.hpp"

#include <cmath>

#include "horo/errors.hpp"
#include "horo/numerics/quadrature.hpp"
#include "horo/transforms/spectral.hpp"

namespace horo::tr {

namespace {

// Integrals over the beta grid of kernel(i, j) * S(i, j), for every lambda index j.
template <class Kernel>
std::vector<cd> boundary_integrals(const SpectralFunction& S, Kernel kernel) {
  std::vector<cd> out(S.lambda.n);
  for (int j = 0; j < S.lambda.n; ++j) {
    num::CompensatedComplexSum acc;
    for (int i = 0; i < S.n_beta; ++i) acc.add(kernel(i, j) * S.at(i, j));
    out[j] = acc.value() / static_cast<double>(S.n_beta);
  }
  return out;
}

// lambda_j and lambda_{n-1-j} are mirror images on a symmetric staggered grid.
double mirror_defect(const std::vector<std::vector<cd>>& I) {
  double top = 0.0, worst = 0.0;
  for (const auto& row : I) {
    const int n = static_cast<int>(row.size());
    for (int j = 0; j < n; ++j) top = std::max(top, std::abs(row[j]));
    for (int j = n / 2; j < n; ++j) worst = std::max(worst, std::abs(row[j] - row[n - 1 - j]));
  }
  return top > 0.0 ? worst / top : 0.0;
}

void require_symmetric(const num::LineGrid& l) {
  if (std::abs(l.lo + l.hi) > 1e-12 * (l.hi - l.lo)) throw DomainViolation("lambda grid must be symmetric");
}

std::vector<double> composite_row(const SpectralFunction& S, const disk::DiskPoint& x) {
  std::vector<double> A(S.n_beta);
  for (int i = 0; i < S.n_beta; ++i) A[i] = disk::composite_distance(x, disk::BoundaryPoint(S.beta(i)));
  return A;
}

}  // namespace

double property_sharp_defect(const SpectralFunction& S, const std::vector<disk::DiskPoint>& probes,
                             const MeasureNormalization&) {
  require_symmetric(S.lambda);
  std::vector<std::vector<cd>> I;
  for (const auto& x : probes) {
    const auto A = composite_row(S, x);
    I.push_back(boundary_integrals(
        S, [&](int i, int j) { return std::exp(cd(1.0, S.lambda.node(j)) * A[i]); }));
  }
  return mirror_defect(I);
}

double property_flat_defect(const HorocycleFunction& F, const std::vector<disk::DiskPoint>& probes,
                            const MeasureNormalization& norm, const num::LineGrid& lambda) {
  require_symmetric(lambda);
  const SpectralFunction S = phi_o(F, norm, lambda);
  std::vector<std::vector<cd>> I;
  for (const auto& x : probes) {
    const auto A = composite_row(S, x);
    // (I x F) Psi*_x F = e^{-(1 - i l) A} phi_o F, integrated against dnu^x = e^{2A} dnu^o
    I.push_back(boundary_integrals(S, [&](int i, int j) {
      const cd transport = std::exp(-cd(1.0, -S.lambda.node(j)) * A[i]);
      return transport * std::exp(2.0 * A[i]);
    }));
  }
  return mirror_defect(I);
}

SpectralFunction odd_profile(int n_beta, const num::LineGrid& lambda) {
  SpectralFunction S(n_beta, lambda);
  for (int i = 0; i < n_beta; ++i)
    for (int j = 0; j < lambda.n; ++j) {
      const double l = lambda.node(j);
      S.at(i, j) = l * std::exp(-l * l / 8.0);
    }
  return S;
}

std::vector<disk::DiskPoint> default_probes() {
  return {disk::DiskPoint(cd(0.0)), disk::DiskPoint(cd(0.3, 0.0)), disk::DiskPoint(cd(-0.1, 0.35)),
          disk::DiskPoint(std::polar(0.45, 2.2)), disk::DiskPoint(std::polar(0.2, 4.0))};
}

}  // namespace horo::tr
