#include <algorithm>
#include <cmath>
#include <numbers>

#include "horo/transforms/cfunction.hpp"
#include "horo/transforms/helgason.hpp"
#include "horo/transforms/intertwining.hpp"
#include "horo/transforms/plancherel.hpp"
#include "horo/transforms/properties.hpp"
#include "horo/transforms/radon.hpp"
#include "horo/transforms/spectral.hpp"
#include "suite_common.hpp"

namespace horo::harness::detail {

namespace {

using lie::SU11Element;
using tr::cd;
using tr::DiskPoint;
using tr::HorocycleFunction;
using tr::SpectralFunction;
using tr::TestFunction;

template <class Samples>
double max_abs(const Samples& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

template <class Samples>
double max_abs_diff(const Samples& a, const Samples& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Row i of the result is row (i - shift) of F.
template <class Grid>
Grid rotate_rows(const Grid& F, int shift, int row_length) {
  Grid out = F;
  const int n = F.n_beta;
  for (int i = 0; i < n; ++i) {
    const int src = ((i - shift) % n + n) % n;
    std::copy_n(F.samples.begin() + static_cast<std::ptrdiff_t>(src) * row_length, row_length,
                out.samples.begin() + static_cast<std::ptrdiff_t>(i) * row_length);
  }
  return out;
}

// Trapezoid norm of a sampled function on a tau grid, with the c_A dtau measure.
double line_norm_sq(const std::vector<cd>& s, const num::LineGrid& g, double c_A) {
  num::CompensatedSum acc;
  for (const auto& v : s) acc.add(std::norm(v));
  return acc.value() * g.step() * c_A;
}

double spectrum_norm_sq(const std::vector<cd>& S, const num::FourierPair& pair) {
  num::CompensatedSum acc;
  for (const auto& v : S) acc.add(std::norm(v));
  return acc.value() * pair.lambda_weight();
}

// TransformGrids scaled down for the unitarity refinement ladder.
tr::TransformGrids ladder_level(const tr::TransformGrids& base, int level) {
  tr::TransformGrids g = base;
  const int div = 1 << level;
  g.tau.n = std::max(2, base.tau.n / div);
  g.lambda.n = std::max(2, base.lambda.n / div);
  g.lambda.lo = base.lambda.lo / div;
  g.lambda.hi = base.lambda.hi / div;
  return g;
}

}  // namespace

VerificationReport slice_suite(const RunConfig& config, const tr::Calibration& cal) {
  VerificationReport rep;
  const auto& norm = cal.norm;
  const tr::TransformGrids grids = config.grids;
  const tr::TransformGrids fine = grids.doubled();
  const auto bumps = tr::seeded_bumps(config.seed, config.bumps);
  const double tol = config.tolerance("slice", 1e-3);
  const double tol_fine = config.tolerance("slice-doubled", 1e-4);

  for (const auto& f : bumps) {
    guarded(rep, "slice.fourier_slice.default." + f.label(), "fourier-slice", tol, [&] {
      const SpectralFunction A = tr::phi_o(tr::radon_grid(f, norm, grids), norm, grids.lambda);
      const SpectralFunction H = tr::helgason_grid(f, norm, grids);
      const double r = tr::relative_spectral_distance(A, H, norm);
      rep.add("slice.fourier_slice.default." + f.label(), "fourier-slice",
              tr::norm_spectral(A, norm), tr::norm_spectral(H, norm), r, tol);
    });
    guarded(rep, "slice.fourier_slice.doubled." + f.label(), "fourier-slice", tol_fine, [&] {
      const SpectralFunction A = tr::phi_o(tr::radon_grid(f, norm, fine), norm, fine.lambda);
      const SpectralFunction H = tr::helgason_grid(f, norm, fine);
      const double r = tr::relative_spectral_distance(A, H, norm);
      rep.add("slice.fourier_slice.doubled." + f.label(), "fourier-slice",
              tr::norm_spectral(A, norm), tr::norm_spectral(H, norm), r, tol_fine);
    });
  }

  // Helgason transform of a rotated function is the rotated transform.
  if (!bumps.empty()) {
    const TestFunction& f = bumps.front();
    guarded(rep, "slice.helgason.rotation_equivariance", "helgason-equivariance", 1e-8, [&] {
      constexpr int kShift = 16;
      const double phi = std::numbers::pi * kShift / grids.n_beta;  // k_phi moves b by 2 phi
      const SpectralFunction H = tr::helgason_grid(f, norm, grids);
      const SpectralFunction Hr =
          tr::helgason_grid(f.translated(SU11Element::rotation(phi)), norm, grids);
      const SpectralFunction expect = rotate_rows(H, kShift, grids.lambda.n);
      const double r = max_abs_diff(Hr.samples, expect.samples) / max_abs(H.samples);
      rep.add("slice.helgason.rotation_equivariance", "helgason-equivariance", max_abs(Hr.samples),
              max_abs(expect.samples), r, 1e-8);
    });
  }

  // Abel transform integrability: int |Af(beta, .)| c_A dtau at two resolutions.
  if (!bumps.empty()) {
    const TestFunction& f = bumps.front();
    guarded(rep, "slice.abel.integrability_refinement", "abel-integrability", 1e-6, [&] {
      tr::TransformGrids refined = grids;
      refined.tau = grids.tau.doubled();
      refined.horocycle = grids.horocycle.refined();
      double worst = 0.0, l = 0.0, r = 0.0;
      for (int q = 0; q < 4; ++q) {
        const double beta = tr::beta_node(q * grids.n_beta / 4 + 1, grids.n_beta);
        auto l1 = [&](const tr::TransformGrids& g) {
          const auto nodes = g.tau.nodes();
          const auto col = tr::radon_column(f, beta, nodes, norm, g.horocycle);
          num::CompensatedSum acc;
          for (std::size_t k = 0; k < col.size(); ++k) acc.add(std::exp(nodes[k]) * std::abs(col[k]));
          return acc.value() * g.tau.step() * norm.c_A;
        };
        const double a = l1(grids), b = l1(refined);
        if (!std::isfinite(a) || !std::isfinite(b)) throw QuadratureUnderresolved("Abel integral not finite");
        if (rel(a, b) >= worst) {
          worst = rel(a, b);
          l = a;
          r = b;
        }
      }
      rep.add("slice.abel.integrability_refinement", "abel-integrability", l, r, worst, 1e-6);
    });
  }

  // Scalar Fourier transform on A: Plancherel and shift-modulation.
  {
    auto rng = suite_rng(config, 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double mu = -1.0 + 2.0 * u(rng), width = 0.6 + 0.6 * u(rng), freq = -2.0 + 4.0 * u(rng);
    const num::LineGrid& tg = grids.tau;
    const num::FourierPair pair(tg, grids.lambda, norm.c_A);
    std::vector<cd> s(tg.n), shifted(tg.n);
    constexpr int kSteps = 8;
    const double alpha = kSteps * tg.step();
    for (int k = 0; k < tg.n; ++k) {
      auto g = [&](double t) {
        return std::exp(-(t - mu) * (t - mu) / (2.0 * width * width)) * std::polar(1.0, freq * t);
      };
      s[k] = g(tg.node(k));
      shifted[k] = g(tg.node(k) - alpha);
    }
    const auto S = pair.forward(s);
    const double lhs = spectrum_norm_sq(S, pair), rhs = line_norm_sq(s, tg, norm.c_A);
    rep.add("slice.fourier_a.plancherel_gaussian", "fourier-a-plancherel", lhs, rhs, rel(lhs, rhs),
            config.tolerance("fourier", 1e-6));
    const auto Ss = pair.forward(shifted);
    double worst = 0.0;
    for (int j = 0; j < grids.lambda.n; ++j)
      worst = std::max(worst, std::abs(Ss[j] - std::polar(1.0, -grids.lambda.node(j) * alpha) * S[j]));
    const double r = worst / max_abs(S);
    rep.add("slice.fourier_a.shift_modulation", "fourier-a-intertwining", worst, 0.0, r, 1e-10);
  }
  return rep;
}

VerificationReport plancherel_suite(const RunConfig& config, const tr::Calibration& cal) {
  VerificationReport rep;
  const auto& norm = cal.norm;
  const tr::TransformGrids& grids = config.grids;
  const double tol_c = config.tolerance("cfunction", 1e-9);

  {
    double worst = 0.0, wl = 0.0, wr = 0.0;
    constexpr int kSweep = 400;
    for (int i = 0; i < kSweep; ++i) {
      const double l = 0.05 * std::pow(1000.0, static_cast<double>(i) / (kSweep - 1));
      const double gamma_side = 1.0 / std::norm(tr::c_complex(l));
      const double closed = tr::c_abs_sq_inv(l);
      if (rel(gamma_side, closed) >= worst) {
        worst = rel(gamma_side, closed);
        wl = gamma_side;
        wr = closed;
      }
    }
    rep.add("plancherel.c_function.gamma_vs_closed_form", "c-function", wl, wr, worst, tol_c);
    const double at2 = 1.0 / std::norm(tr::c_complex(2.0));
    const double expect = std::numbers::pi * std::tanh(std::numbers::pi);
    rep.add("plancherel.c_function.lambda_two", "c-function", at2, expect, rel(at2, expect), tol_c);
    const double small = 1e-3;
    const double ratio = tr::c_abs_sq_inv(small) / (std::numbers::pi * std::numbers::pi * small * small / 4.0);
    rep.add("plancherel.c_function.small_lambda_expansion", "c-function", ratio, 1.0,
            std::abs(ratio - 1.0), 1e-5);
    guarded(rep, "plancherel.c_function.pole_at_zero", "c-function", 0.0, [&] {
      bool raised = false;
      try {
        (void)tr::c_function(0.0);
      } catch (const PoleError&) {
        raised = true;
      }
      rep.add("plancherel.c_function.pole_at_zero", "c-function", raised ? 1.0 : 0.0, 1.0,
              raised ? 0.0 : 1.0, 0.0);
    });
  }

  const auto bumps = tr::seeded_bumps(config.seed, config.bumps);
  const double tol_p = config.tolerance("plancherel", 1e-3);
  const double tol_k = config.tolerance("kappa", 1e-3);
  tr::MeasureNormalization raw = norm;
  raw.kappa = 1.0;
  std::vector<SpectralFunction> H(bumps.size());
  std::vector<double> fnorm(bumps.size(), 0.0);
  guarded(rep, "plancherel.kappa.function_independence", "plancherel-kappa", tol_k, [&] {
    double spread = 0.0, kl = norm.kappa;
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      H[i] = tr::helgason_grid(bumps[i], raw, grids);
      fnorm[i] = tr::norm_x(bumps[i], raw, grids);
      const double k = tr::plancherel_spectral(H[i], H[i], raw).real() / (fnorm[i] * fnorm[i]);
      if (rel(k, norm.kappa) >= spread) {
        spread = rel(k, norm.kappa);
        kl = k;
      }
    }
    rep.add("plancherel.kappa.function_independence", "plancherel-kappa", kl, norm.kappa, spread, tol_k);
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      const cd lhs = fnorm[i] * fnorm[i];
      const cd rhs = tr::plancherel_spectral(H[i], H[i], norm);
      rep.add("plancherel.identity." + bumps[i].label(), "plancherel", lhs.real(), rhs.real(),
              std::abs(lhs - rhs) / std::abs(lhs), tol_p);
    }
  });

  guarded(rep, "plancherel.disjoint_supports", "plancherel", 1e-6, [&] {
    const double r = std::tanh(2.3);
    const TestFunction f1 = tr::gaussian_bump("left", DiskPoint(cd(-r, 0.0)), 0.25);
    const TestFunction f2 = tr::gaussian_bump("right", DiskPoint(cd(r, 0.0)), 0.25, cd(0.0, 1.0));
    if (disk::distance(f1.center(), f2.center()) <= f1.support_radius() + f2.support_radius())
      throw DomainViolation("supports overlap");
    const tr::PlancherelPair p = tr::plancherel_pair(f1, f2, norm, grids);
    const double scale = tr::norm_x(f1, norm, grids) * tr::norm_x(f2, norm, grids);
    rep.add("plancherel.disjoint_supports", "plancherel", std::abs(p.lhs), std::abs(p.rhs),
            std::max(std::abs(p.lhs), std::abs(p.rhs)) / scale, 1e-6);
  });

  if (bumps.size() >= 2) {
    guarded(rep, "plancherel.polarization", "plancherel", tol_p, [&] {
      const TestFunction& f1 = bumps[0];
      const TestFunction& f2 = bumps[1];
      const cd units[4] = {1.0, -1.0, cd(0.0, 1.0), cd(0.0, -1.0)};
      cd polar = 0.0;
      for (const cd& u : units) {
        const TestFunction c = tr::linear_combination(1.0, f1, u, f2);
        const SpectralFunction Hc = tr::helgason_grid(c, norm, grids);
        polar += u * tr::plancherel_spectral(Hc, Hc, norm);
      }
      polar /= 4.0;
      const cd direct = tr::inner_product_x(f1, f2, norm, grids);
      const double scale = fnorm[0] * fnorm[1];
      rep.add("plancherel.polarization", "plancherel", std::abs(polar), std::abs(direct),
              std::abs(polar - direct) / scale, tol_p);
    });
  }
  return rep;
}

VerificationReport unitarity_suite(const RunConfig& config, const tr::Calibration& cal) {
  VerificationReport rep;
  const auto& norm = cal.norm;
  const tr::TransformGrids& grids = config.grids;
  const auto bumps = tr::seeded_bumps(config.seed, config.bumps);
  const double tol = config.tolerance("unitarity", 1e-3);

  for (std::size_t i = 0; i < bumps.size(); ++i) {
    const TestFunction& f = bumps[i];
    guarded(rep, "unitarity.isometry." + f.label(), "unitarization", tol, [&] {
      const HorocycleFunction R = tr::radon_grid(f, norm, grids);
      const HorocycleFunction Q = tr::q_operator_from_radon(R, norm, grids);
      const double nq = tr::norm_xi(Q, norm), nf = tr::norm_x(f, norm, grids);
      rep.add("unitarity.isometry." + f.label(), "unitarization", nq, nf, std::abs(nq / nf - 1.0), tol);

      const SpectralFunction M = tr::lambda_multiplier(tr::phi_o(R, norm, grids.lambda));
      const double chain = tr::norm_spectral(M, norm);
      const double expect = nf * std::sqrt(norm.kappa);
      rep.add("unitarity.chain." + f.label(), "lambda-multiplier", chain, expect,
              std::abs(chain / expect - 1.0), tol);

      if (i == 0) {
        const HorocycleFunction back =
            tr::phi_o_inverse(tr::phi_o(R, norm, grids.lambda), norm, grids.tau);
        const double r = tr::relative_xi_distance(back, R, norm);
        rep.add("unitarity.fourier_round_trip", "phi-isometry", tr::norm_xi(back, norm),
                tr::norm_xi(R, norm), r, 1e-10);
      }
    });

    guarded(rep, "unitarity.refinement." + f.label(), "unitarization", 0.0, [&] {
      double prev = 0.0;
      double worst_excess = 0.0;
      double first = 0.0, last = 0.0;
      for (int level = 2; level >= 0; --level) {
        const tr::TransformGrids g = ladder_level(grids, level);
        const HorocycleFunction Q = tr::q_operator(f, norm, g);
        const double defect = std::abs(tr::norm_xi(Q, norm) / tr::norm_x(f, norm, g) - 1.0);
        if (level == 2) first = defect;
        else worst_excess = std::max(worst_excess, defect - std::max(prev, 1e-9));
        prev = defect;
        last = defect;
      }
      rep.add("unitarity.refinement." + f.label(), "unitarization", first, last,
              std::max(0.0, worst_excess), 0.0);
    });
  }

  // Phi_o on a beta-dependent profile F = e^{-tau} g(beta, tau).
  guarded(rep, "unitarity.phi_o.isometry_profile", "phi-isometry", 1e-4, [&] {
    auto rng = suite_rng(config, 5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double a0 = 0.5 * u(rng), a1 = 0.5 * u(rng), w0 = 0.6 + 0.4 * u(rng), om = -1.0 + 2.0 * u(rng);
    HorocycleFunction F(grids.n_beta, grids.tau);
    for (int i = 0; i < F.n_beta; ++i) {
      const double b = F.beta(i);
      const double mu = a0 * std::cos(b) + a1 * std::sin(2.0 * b);
      const double w = w0 * (1.0 + 0.2 * std::cos(b));
      for (int k = 0; k < grids.tau.n; ++k) {
        const double t = grids.tau.node(k);
        F.at(i, k) = std::exp(-t) * std::exp(-(t - mu) * (t - mu) / (2.0 * w * w)) *
                     std::polar(1.0, om * t * std::sin(b));
      }
    }
    const SpectralFunction S = tr::phi_o(F, norm, grids.lambda);
    const double l = tr::norm_spectral(S, norm), r = tr::norm_xi(F, norm);
    rep.add("unitarity.phi_o.isometry_profile", "phi-isometry", l, r, rel(l, r), 1e-4);
  });

  {
    double odd = 0.0;
    for (int j = 0; j < grids.lambda.n; ++j) {
      const double l = grids.lambda.node(j);
      odd = std::max(odd, std::abs(tr::lambda_multiplier_value(l) - tr::lambda_multiplier_value(-l)));
      odd = std::max(odd, std::abs(tr::c_abs_sq_inv(l) - tr::c_abs_sq_inv(-l)));
    }
    rep.add("unitarity.multiplier.even", "lambda-multiplier", odd, 0.0, odd, 0.0);
  }
  return rep;
}

VerificationReport intertwine_suite(const RunConfig& config, const tr::Calibration& cal) {
  VerificationReport rep;
  const auto& norm = cal.norm;
  const tr::TransformGrids& grids = config.grids;
  const auto bumps = tr::seeded_bumps(config.seed, std::min(config.bumps, 2));
  const double tol = config.tolerance("intertwine", 1e-3);
  const double sqrt_kappa = std::sqrt(norm.kappa);
  const std::pair<std::string, SU11Element> generators[] = {
      {"k", SU11Element::rotation(0.7)}, {"a", SU11Element::boost(0.4)}, {"n", SU11Element::shear(0.3)}};

  for (const auto& f : bumps) {
    for (const auto& [gname, g] : generators) {
      const std::string tag = f.label() + "." + gname;
      guarded(rep, "intertwine.radon." + tag, "radon-intertwining", tol, [&] {
        const TestFunction fg = f.translated(g);
        const HorocycleFunction lhs = tr::radon_grid(fg, norm, grids);
        const HorocycleFunction rhs =
            tr::transported(g, tr::radon_evaluator(f, norm, grids), grids.n_beta, grids.tau);
        rep.add("intertwine.radon." + tag, "radon-intertwining", tr::norm_xi(lhs, norm),
                tr::norm_xi(rhs, norm), tr::relative_xi_distance(lhs, rhs, norm), tol);
        const double pw = max_abs_diff(lhs.samples, rhs.samples) / max_abs(lhs.samples);
        rep.add("intertwine.radon_pointwise." + tag, "radon-intertwining", max_abs(lhs.samples),
                max_abs(rhs.samples), pw, 1e-6);

        const num::LineGrid out = grids.output_tau();
        const HorocycleFunction q_lhs = tr::q_operator_from_radon(lhs, norm, grids);
        const HorocycleFunction q_rhs =
            tr::transported(g, tr::q_evaluator(f, norm, grids), grids.n_beta, out);
        rep.add("intertwine.q." + tag, "q-intertwining", tr::norm_xi(q_lhs, norm),
                tr::norm_xi(q_rhs, norm), tr::relative_xi_distance(q_lhs, q_rhs, norm), tol);

        // Lambda pi_hat(g) F against pi_hat(g) Lambda F, with F = Rf.
        HorocycleFunction l_lhs = tr::apply_lambda(rhs, norm, grids.lambda, out);
        HorocycleFunction l_rhs = q_rhs;
        for (auto& v : l_rhs.samples) v *= sqrt_kappa;
        rep.add("intertwine.lambda." + tag, "lambda-intertwining", tr::norm_xi(l_lhs, norm),
                tr::norm_xi(l_rhs, norm), tr::relative_xi_distance(l_lhs, l_rhs, norm), tol);
      });
    }
  }

  if (!bumps.empty()) {
    const TestFunction& f = bumps.front();
    guarded(rep, "intertwine.radon.rotation_grid_shift", "radon-intertwining", 1e-8, [&] {
      constexpr int kShift = 16;
      const double phi = std::numbers::pi * kShift / grids.n_beta;
      const HorocycleFunction R = tr::radon_grid(f, norm, grids);
      const HorocycleFunction Rr =
          tr::radon_grid(f.translated(SU11Element::rotation(phi)), norm, grids);
      const HorocycleFunction expect = rotate_rows(R, kShift, grids.tau.n);
      rep.add("intertwine.radon.rotation_grid_shift", "radon-intertwining", max_abs(Rr.samples),
              max_abs(expect.samples), max_abs_diff(Rr.samples, expect.samples) / max_abs(R.samples),
              1e-8);
    });
  }

  guarded(rep, "intertwine.radon.radial_beta_independence", "radon-intertwining", 1e-8, [&] {
    const TestFunction f = tr::reference_bump();
    const HorocycleFunction R = tr::radon_grid(f, norm, grids);
    double worst = 0.0;
    for (int i = 1; i < R.n_beta; ++i)
      for (int k = 0; k < R.tau.n; ++k) worst = std::max(worst, std::abs(R.at(i, k) - R.at(0, k)));
    rep.add("intertwine.radon.radial_beta_independence", "radon-intertwining", worst, 0.0,
            worst / max_abs(R.samples), 1e-8);
  });

  // Rf in the Psi_x parametrization against direct quadrature along kappa_x(k) a_tau n_s [x].
  if (!bumps.empty()) {
    const TestFunction& f = bumps.front();
    guarded(rep, "intertwine.radon_reference.direct_quadrature", "radon-reference", 1e-8, [&] {
      auto rng = suite_rng(config, 7);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const num::QuadratureSpec along{num::Rule::GaussLegendre, 400, 8, 12.0, 1e-12};
      double worst = 0.0, wl = 0.0, wr = 0.0, on_set = 0.0;
      for (int c = 0; c < 6; ++c) {
        const DiskPoint x(std::polar(std::tanh(0.8 * u(rng)), 2.0 * std::numbers::pi * u(rng)));
        const disk::HorocycleParam h{disk::BoundaryPoint(2.0 * std::numbers::pi * u(rng)), -0.8 + 1.6 * u(rng)};
        const cd lhs = tr::radon_at_reference(f, h, x, norm, grids.horocycle);
        const disk::HorocycleParam ho = disk::rereference_horocycle(h, x, DiskPoint::origin());
        const auto direct = num::integrate_1d(
            [&](double v) -> cd {
              return std::cosh(v) * f(disk::horocycle_point(ho, DiskPoint::origin(), std::sinh(v)));
            },
            along);
        for (double v : {-2.0, -0.3, 0.5, 1.7}) {
          const DiskPoint p = disk::horocycle_point(ho, DiskPoint::origin(), std::sinh(v));
          on_set = std::max(on_set, std::abs(disk::composite_distance(x, p, h.b) - h.tau));
        }
        const cd rhs = norm.c_N * direct.value;
        const double r = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
        if (r >= worst) {
          worst = r;
          wl = std::abs(lhs);
          wr = std::abs(rhs);
        }
      }
      rep.add("intertwine.radon_reference.direct_quadrature", "radon-reference", wl, wr, worst, 1e-8);
      rep.add("intertwine.radon_reference.same_horocycle", "radon-reference", on_set, 0.0, on_set, 1e-10);
    });
    guarded(rep, "intertwine.radon_reference.boost_shift", "radon-reference", 1e-12, [&] {
      const double u = 0.35, tau = 0.2;
      const DiskPoint x = disk::mobius(SU11Element::boost(u), DiskPoint::origin());
      const disk::HorocycleParam h{disk::BoundaryPoint(0.0), tau};
      const cd lhs = tr::radon_at_reference(f, h, x, norm, grids.horocycle);
      const cd rhs = tr::radon(f, disk::HorocycleParam{h.b, tau + u}, norm, grids.horocycle);
      rep.add("intertwine.radon_reference.boost_shift", "radon-reference", std::abs(lhs),
              std::abs(rhs), std::abs(lhs - rhs) / std::abs(rhs), 1e-12);
    });
  }
  return rep;
}

VerificationReport properties_suite(const RunConfig& config, const tr::Calibration& cal) {
  VerificationReport rep;
  const auto& norm = cal.norm;
  const tr::TransformGrids& grids = config.grids;
  const auto bumps = tr::seeded_bumps(config.seed, std::min(config.bumps, 2));
  const auto probes = tr::default_probes();
  const double tol = config.tolerance("properties", 1e-3);

  for (const auto& f : bumps) {
    guarded(rep, "properties.sharp.helgason." + f.label(), "property-sharp", tol, [&] {
      const double d = tr::property_sharp_defect(tr::helgason_grid(f, norm, grids), probes, norm);
      rep.add("properties.sharp.helgason." + f.label(), "property-sharp", d, 0.0, d, tol);
    });
    guarded(rep, "properties.flat.radon." + f.label(), "property-flat", tol, [&] {
      const HorocycleFunction R = tr::radon_grid(f, norm, grids);
      const double d = tr::property_flat_defect(R, probes, norm, grids.lambda);
      rep.add("properties.flat.radon." + f.label(), "property-flat", d, 0.0, d, tol);
      const HorocycleFunction Q = tr::q_operator_from_radon(R, norm, grids);
      const double dq = tr::property_flat_defect(Q, probes, norm, grids.lambda);
      rep.add("properties.flat.q." + f.label(), "property-flat", dq, 0.0, dq, tol);
    });
  }

  {
    const double d = tr::property_sharp_defect(tr::odd_profile(grids.n_beta, grids.lambda), probes, norm);
    // Passes when the defect is at least 0.1.
    rep.add("properties.sharp.odd_profile_control", "property-sharp", d, 0.1,
            d > 0.0 ? 0.1 / d : std::numeric_limits<double>::infinity(), 1.0);
  }

  guarded(rep, "properties.linearity.helgason", "linearity", 1e-12, [&] {
    const DiskPoint c(cd(0.2, -0.1));
    const TestFunction f = tr::gaussian_bump("f", c, 0.45, cd(1.0, 0.5), 0.3);
    const TestFunction g = tr::gaussian_bump("g", c, 0.45, cd(-0.4, 1.1), -0.7);
    const cd a(0.7, -0.2), b(-1.3, 0.4);
    const TestFunction h = tr::linear_combination(a, f, b, g);
    const SpectralFunction Hf = tr::helgason_grid(f, norm, grids), Hg = tr::helgason_grid(g, norm, grids);
    const SpectralFunction Hh = tr::helgason_grid(h, norm, grids);
    SpectralFunction comb = Hf;
    for (std::size_t i = 0; i < comb.samples.size(); ++i) comb.samples[i] = a * Hf.samples[i] + b * Hg.samples[i];
    const double r = tr::relative_spectral_distance(Hh, comb, norm);
    rep.add("properties.linearity.helgason", "linearity", tr::norm_spectral(Hh, norm),
            tr::norm_spectral(comb, norm), r, 1e-12);

    const HorocycleFunction Rf = tr::radon_grid(f, norm, grids), Rg = tr::radon_grid(g, norm, grids);
    const HorocycleFunction Rh = tr::radon_grid(h, norm, grids);
    HorocycleFunction rc = Rf;
    for (std::size_t i = 0; i < rc.samples.size(); ++i) rc.samples[i] = a * Rf.samples[i] + b * Rg.samples[i];
    const double rr = tr::relative_xi_distance(Rh, rc, norm);
    rep.add("properties.linearity.radon", "linearity", tr::norm_xi(Rh, norm), tr::norm_xi(rc, norm), rr,
            1e-12);

    const HorocycleFunction Qf = tr::q_operator_from_radon(Rf, norm, grids);
    const HorocycleFunction Qg = tr::q_operator_from_radon(Rg, norm, grids);
    const HorocycleFunction Qh = tr::q_operator_from_radon(Rh, norm, grids);
    HorocycleFunction qc = Qf;
    for (std::size_t i = 0; i < qc.samples.size(); ++i) qc.samples[i] = a * Qf.samples[i] + b * Qg.samples[i];
    const double rq = tr::relative_xi_distance(Qh, qc, norm);
    rep.add("properties.linearity.q", "linearity", tr::norm_xi(Qh, norm), tr::norm_xi(qc, norm), rq, 1e-12);
  });
  return rep;
}

}  // namespace horo::harness::detail
