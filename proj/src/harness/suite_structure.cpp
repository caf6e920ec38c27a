#include <Eigen/Dense>
#include <algorithm>
#include <numbers>
#include <numeric>

#include "horo/lie/sl.hpp"
#include "horo/lie/su11.hpp"
#include "suite_common.hpp"

namespace horo::harness::detail {

namespace {

using lie::Matrix;
using lie::Vector;

Matrix random_sl_matrix(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = u(rng);
    if (std::abs(m.determinant()) > 0.05) return lie::renormalize_det(m).matrix();
  }
}

Vector random_traceless(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector h(d);
  for (int i = 0; i < d; ++i) h(i) = u(rng);
  h.array() -= h.mean();
  return h;
}

template <class M>
double max_abs(const Eigen::MatrixBase<M>& m) {
  return m.cwiseAbs().maxCoeff();
}

double lower_part(const Matrix& n) {
  double r = 0.0;
  for (int i = 0; i < n.rows(); ++i)
    for (int j = 0; j <= i; ++j) r = std::max(r, std::abs(n(i, j) - (i == j ? 1.0 : 0.0)));
  return r;
}

double angle_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}


void sl_checks(VerificationReport& rep, int d, int samples, std::mt19937_64& rng) {
  const std::string p = "structure.sl" + std::to_string(d) + ".";
  double kan_res = 0, nak_res = 0, orth = 0, tri = 0, trace = 0, uniq = 0, inv = 0, detk = 0;
  for (int s = 0; s < samples; ++s) {
    const lie::SLMatrix g(random_sl_matrix(d, rng));
    const auto kan = lie::iwasawa_kan(g);
    const auto nak = lie::iwasawa_nak(g);
    kan_res = std::max(kan_res, max_abs(kan.reassemble() - g.matrix()));
    nak_res = std::max(nak_res, max_abs(nak.reassemble() - g.matrix()));
    orth = std::max({orth, max_abs(kan.k.transpose() * kan.k - Matrix::Identity(d, d)),
                     max_abs(nak.k.transpose() * nak.k - Matrix::Identity(d, d))});
    detk = std::max({detk, std::abs(kan.k.determinant() - 1.0), std::abs(nak.k.determinant() - 1.0)});
    tri = std::max({tri, lower_part(kan.n), lower_part(nak.n)});
    trace = std::max({trace, std::abs(kan.a_log.sum()), std::abs(nak.a_log.sum())});
    const auto again = lie::iwasawa_kan(lie::SLMatrix(kan.reassemble()));
    uniq = std::max({uniq, max_abs(again.k - kan.k), (again.a_log - kan.a_log).cwiseAbs().maxCoeff(),
                     max_abs(again.n - kan.n)});
    const auto ninv = lie::iwasawa_nak(g.inverse());
    inv = std::max(inv, (ninv.a_log + kan.a_log).cwiseAbs().maxCoeff());
  }
  rep.add(p + "kan.reassembly", "iwasawa-kan", kan_res, 0, kan_res, 1e-12);
  rep.add(p + "nak.reassembly", "iwasawa-nak", nak_res, 0, nak_res, 1e-12);
  rep.add(p + "k.orthogonality", "iwasawa-kan", orth, 0, orth, 1e-12);
  rep.add(p + "k.determinant", "iwasawa-kan", detk, 0, detk, 1e-12);
  rep.add(p + "n.unit_triangular", "iwasawa-kan", tri, 0, tri, 0.0);
  rep.add(p + "a.trace", "iwasawa-kan", trace, 0, trace, 1e-12);
  rep.add(p + "kan.uniqueness", "iwasawa-kan", uniq, 0, uniq, 1e-10);
  rep.add(p + "a_of_inverse_is_minus_h", "iwasawa-inverse", inv, 0, inv, 1e-10);
}

void su11_checks(VerificationReport& rep, int samples, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), u(-2.0, 2.0);
  double kan_res = 0, nak_res = 0, rec = 0, inv = 0, uniq = 0;
  for (int s = 0; s < samples; ++s) {
    const double th = ang(rng), t = u(rng), sh = u(rng);
    const lie::SU11Element g = lie::SU11Element::rotation(th) * lie::SU11Element::boost(t) *
                               lie::SU11Element::shear(sh);
    const auto kan = lie::iwasawa_kan(g);
    const auto nak = lie::iwasawa_nak(g);
    kan_res = std::max(kan_res, max_abs(kan.reassemble().matrix() - g.matrix()));
    nak_res = std::max(nak_res, max_abs(nak.reassemble().matrix() - g.matrix()));
    rec = std::max({rec, angle_gap(kan.theta, th), std::abs(kan.t - t), std::abs(kan.s - sh)});
    inv = std::max(inv, std::abs(lie::iwasawa_nak(g.inverse()).t + kan.t));
    const auto again = lie::iwasawa_kan(kan.reassemble());
    uniq = std::max({uniq, angle_gap(again.theta, kan.theta), std::abs(again.t - kan.t),
                     std::abs(again.s - kan.s)});
  }
  rep.add("structure.su11.kan.reassembly", "iwasawa-kan", kan_res, 0, kan_res, 1e-12);
  rep.add("structure.su11.nak.reassembly", "iwasawa-nak", nak_res, 0, nak_res, 1e-12);
  rep.add("structure.su11.kan.parameter_recovery", "iwasawa-kan", rec, 0, rec, 1e-10);
  rep.add("structure.su11.kan.uniqueness", "iwasawa-kan", uniq, 0, uniq, 1e-10);
  rep.add("structure.su11.a_of_inverse_is_minus_h", "iwasawa-inverse", inv, 0, inv, 1e-10);

  const auto a1 = lie::iwasawa_kan(lie::SU11Element::boost(1.0));
  const double ex = std::max({std::abs(a1.theta), std::abs(a1.t - 1.0), std::abs(a1.s)});
  rep.add("structure.su11.kan.boost_example", "iwasawa-kan", a1.t, 1.0, ex, 1e-12);
  const auto na = lie::iwasawa_nak(lie::SU11Element::shear(2.0) * lie::SU11Element::boost(0.5));
  const double ex2 = std::max({std::abs(na.s - 2.0), std::abs(na.t - 0.5), angle_gap(na.theta, 0.0)});
  rep.add("structure.su11.nak.na_example", "iwasawa-nak", na.s, 2.0, ex2, 1e-12);
}

void root_checks(VerificationReport& rep, std::mt19937_64& rng) {
  double rho_res = 0, hom = 0, addet = 0, rootsp = 0, bracket = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int s = 0; s < 50; ++s) {
      const Vector H = random_traceless(d, rng);
      rho_res = std::max(rho_res, std::abs(lie::rho(H) - lie::rho_half_root_sum(H)));
      const Vector H2 = random_traceless(d, rng);
      hom = std::max(hom, rel(lie::modular_an(H + H2), lie::modular_an(H) * lie::modular_an(H2)));
      const Matrix a = lie::diag_exp(H), ainv = lie::diag_exp(-H);
      for (const auto& r : lie::restricted_roots(d)) {
        const Matrix X = r.root_vector(d);
        rootsp = std::max(rootsp, max_abs(a * X * ainv - std::exp(r(H)) * X) /
                                      std::max(1.0, std::exp(r(H))));
        const Matrix Hd = H.asDiagonal();
        bracket = std::max(bracket, max_abs(Hd * X - X * Hd - r(H) * X));
      }
      // Ad(a) on the strictly upper triangular subalgebra.
      const auto pos = lie::positive_roots(d);
      Matrix ad(pos.size(), pos.size());
      for (std::size_t c = 0; c < pos.size(); ++c) {
        const Matrix img = a * pos[c].root_vector(d) * ainv;
        for (std::size_t r = 0; r < pos.size(); ++r) ad(r, c) = img(pos[r].i - 1, pos[r].j - 1);
      }
      addet = std::max(addet, rel(lie::modular_an(H), 1.0 / ad.determinant()));
    }
  }
  rep.add("structure.rho.closed_form_vs_half_root_sum", "rho", rho_res, 0, rho_res, 1e-12);
  Vector h3(3);
  h3 << 1.0, 0.0, -1.0;
  rep.add("structure.rho.d3_example", "rho", lie::rho(h3), 2.0, std::abs(lie::rho(h3) - 2.0), 1e-15);
  rep.add("structure.modular.homomorphism", "modular-function", hom, 0, hom, 1e-10);
  rep.add("structure.modular.ad_determinant", "modular-function", addet, 0, addet, 1e-10);
  Vector h2(2);
  h2 << 0.7, -0.7;
  rep.add("structure.modular.d2_example", "modular-function", lie::modular_an(h2), std::exp(-1.4),
          rel(lie::modular_an(h2), std::exp(-1.4)), 1e-14);
  rep.add("structure.roots.ad_preserves_root_spaces", "ad-root-spaces", rootsp, 0, rootsp, 1e-12);
  rep.add("structure.roots.bracket", "restricted-roots", bracket, 0, bracket, 1e-14);

  double count_err = 0;
  for (int d = 2; d <= 6; ++d) {
    const auto roots = lie::restricted_roots(d);
    const auto pos = lie::positive_roots(d);
    count_err += std::abs(static_cast<double>(roots.size()) - d * (d - 1)) +
                 std::abs(static_cast<double>(pos.size()) - d * (d - 1) / 2.0);
  }
  rep.add("structure.roots.counts", "restricted-roots", count_err, 0, count_err, 0.0);
  const auto simple = lie::simple_roots(4);
  double simple_err = simple.size() == 3 ? 0.0 : 1.0;
  for (std::size_t k = 0; k < simple.size(); ++k)
    if (simple[k].i != static_cast<int>(k) + 1 || simple[k].j != static_cast<int>(k) + 2) simple_err += 1;
  rep.add("structure.roots.simple_d4", "restricted-roots", static_cast<double>(simple.size()), 3,
          simple_err, 0.0);
}

void weyl_checks(VerificationReport& rep, std::mt19937_64& rng) {
  for (int d = 2; d <= 4; ++d) {
    const double fact = std::tgamma(d + 1.0);
    const double n = static_cast<double>(lie::count_weyl_chambers(d));
    rep.add("structure.weyl.chamber_count.d" + std::to_string(d), "weyl-chambers", n, fact,
            std::abs(n - fact), 0.0);
    // The permutation action maps each chamber into a single chamber.
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    double mismatches = 0;
    do {
      for (int s = 0; s < 20; ++s) {
        const Vector H = random_traceless(d, rng);
        Vector H2 = H + 1e-3 * random_traceless(d, rng);
        if (lie::chamber_signature(H) != lie::chamber_signature(H2)) continue;
        if (lie::chamber_signature(lie::weyl_act(perm, H)) !=
            lie::chamber_signature(lie::weyl_act(perm, H2)))
          mismatches += 1;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.add("structure.weyl.chambers_to_chambers.d" + std::to_string(d), "weyl-chambers", mismatches,
            0, mismatches, 0.0);
  }
}

void cayley_checks(VerificationReport& rep, std::mt19937_64& rng) {
  using lie::cd;
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, 2.0 * std::numbers::pi),
      u(-1.0, 1.0);
  double round = 0, upper = 1.0, real_part = 0, equiv = 0;
  const lie::Mat2 C = lie::cayley_matrix();
  const lie::Mat2 Ci = C.inverse();
  for (int s = 0; s < 100; ++s) {
    const cd z = std::polar(rad(rng), ang(rng));
    const cd w = lie::cayley(z, lie::CayleyDirection::DiskToHalfPlane);
    upper = std::min(upper, w.imag());
    round = std::max(round, std::abs(lie::cayley(w, lie::CayleyDirection::HalfPlaneToDisk) - z));
    const lie::SU11Element g = lie::SU11Element::rotation(ang(rng)) *
                               lie::SU11Element::boost(u(rng)) * lie::SU11Element::shear(u(rng));
    const lie::Mat2 h = C * g.matrix() * Ci;
    real_part = std::max(real_part, h.imag().cwiseAbs().maxCoeff());
    const cd hw = (h(0, 0) * w + h(0, 1)) / (h(1, 0) * w + h(1, 1));
    equiv = std::max(equiv, std::abs(lie::cayley(g.apply(z), lie::CayleyDirection::DiskToHalfPlane) - hw) /
                                std::max(1.0, std::abs(hw)));
  }
  rep.add("structure.cayley.round_trip", "cayley-transform", round, 0, round, 1e-14);
  rep.add("structure.cayley.upper_half_plane", "cayley-transform", upper, 0, upper > 0 ? 0.0 : 1.0, 0.0);
  rep.add("structure.cayley.conjugate_is_real", "cayley-transform", real_part, 0, real_part, 1e-12);
  rep.add("structure.cayley.equivariance", "cayley-transform", equiv, 0, equiv, 1e-12);
  const cd lit = lie::cayley_literal(0.0);
  rep.diagnose("structure.cayley.literal_formula_at_0.imag", lit.imag(),
               "i(z+i)/(z-i) at z = 0; the implemented map is its negative");
}

void killing_checks(VerificationReport& rep, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto basis = lie::su11_basis();
  double worst = 0;
  for (int s = 0; s < 50; ++s) {
    lie::Mat2 X = u(rng) * basis[0] + u(rng) * basis[1] + u(rng) * basis[2];
    lie::Mat2 Y = u(rng) * basis[0] + u(rng) * basis[1] + u(rng) * basis[2];
    const double trace_form = 4.0 * (X * Y).trace().real();
    worst = std::max(worst, std::abs(lie::killing_form(X, Y) - trace_form));
  }
  rep.add("structure.killing.trace_form", "killing-form", worst, 0, worst, 1e-12);
}

}  // namespace

VerificationReport structure_suite(const RunConfig& config) {
  VerificationReport rep;
  auto rng = suite_rng(config, 1);
  for (int d : {2, 3, 4, 6}) sl_checks(rep, d, 1000, rng);
  su11_checks(rep, 1000, rng);
  root_checks(rep, rng);
  weyl_checks(rep, rng);
  cayley_checks(rep, rng);
  killing_checks(rep, rng);
  return rep;
}

}  // namespace horo::harness::detail
