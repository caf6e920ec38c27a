#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "horo/spd/spd.hpp"
#include "suite_common.hpp"

namespace horo::harness::detail {

namespace {

using spd::Matrix;
using spd::SPDPoint;
using spd::Vector;

struct Sampler {
  std::mt19937_64& rng;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  Matrix general(int d) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = unit(rng);
    return m;
  }
  Matrix rotation(int d) {
    Eigen::HouseholderQR<Matrix> qr(general(d));
    Matrix q = qr.householderQ();
    if (q.determinant() < 0.0) q.col(0) *= -1.0;
    return q;
  }
  Vector traceless(int d) {
    Vector a(d);
    for (int i = 0; i < d; ++i) a(i) = unit(rng);
    a.array() -= a.mean();
    return a;
  }
  Matrix unit_upper(int d) {
    Matrix n = Matrix::Identity(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) n(i, j) = unit(rng);
    return n;
  }
  Matrix symmetric(int d) {
    const Matrix m = general(d);
    return 0.5 * (m + m.transpose());
  }
  // k exp(a) n with bounded coordinates
  lie::SLMatrix sl(int d) {
    const Matrix k = rotation(d);
    const Vector a = traceless(d);
    return lie::renormalize_det(Matrix(k * a.array().exp().matrix().asDiagonal() * unit_upper(d)));
  }
  SPDPoint point(int d) {
    const Matrix g = sl(d).matrix();
    return SPDPoint(g * g.transpose());
  }
};

Matrix diag_exp(const Vector& a) { return Matrix(a.array().exp().matrix().asDiagonal()); }

double rel_matrix(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(b.cwiseAbs().maxCoeff(), 1e-300);
}

SPDPoint unit_det(const Matrix& p) {
  return SPDPoint(p / std::pow(p.determinant(), 1.0 / static_cast<double>(p.rows())));
}

// Symmetric positive definite square root.
Matrix sqrtm(const Matrix& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

VerificationReport spd_suite(const RunConfig& config) {
  VerificationReport rep;
  auto rng = suite_rng(config, 9);
  Sampler S{rng};
  const double tol = config.tolerance("spd", 1e-10);
  const double sym_tol = config.tolerance("spd-symmetry", 1e-8);

  for (int d : {2, 3, 5}) {
    const std::string D = "d" + std::to_string(d);
    guarded(rep, "spd.horocycle.membership." + D, "spd-horocycle", 0.0, [&] {
      int missed = 0, accepted = 0;
      double worst_on = 0.0, least_off = 1e300;
      for (int i = 0; i < 1000; ++i) {
        const Matrix k = S.rotation(d);
        const Vector a = S.traceless(d);
        const Matrix an = diag_exp(a) * S.unit_upper(d);
        const SPDPoint p(k * an * an.transpose() * k.transpose());
        worst_on = std::max(worst_on, spd::horocycle_membership_residual(p, k, a));
        if (!spd::horocycle_membership(p, k, a)) ++missed;
        Matrix bumped = p.matrix();
        bumped(i % d, i % d) *= 1.0 + 1e-3;
        const SPDPoint q = unit_det(bumped);
        least_off = std::min(least_off, spd::horocycle_membership_residual(q, k, a));
        if (spd::horocycle_membership(q, k, a)) ++accepted;
      }
      rep.add("spd.horocycle.membership." + D, "spd-horocycle", worst_on, 0.0, missed, 0.0);
      rep.add("spd.horocycle.perturbed_rejected." + D, "spd-horocycle", least_off, 0.0, accepted, 0.0);
    });

    guarded(rep, "spd.udu.reassembly." + D, "udu", tol, [&] {
      double reassembly = 0.0, lower = 0.0, diag = 0.0;
      for (int i = 0; i < 200; ++i) {
        const SPDPoint p = S.point(d);
        const spd::UDUFactors f = spd::udu_decompose(p);
        reassembly = std::max(reassembly, rel_matrix(f.reassemble(), p.matrix()));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c <= r; ++c) lower = std::max(lower, std::abs(f.u(r, c) - (r == c ? 1.0 : 0.0)));
        const Vector a = S.traceless(d);
        const Matrix an = diag_exp(a) * S.unit_upper(d);
        const spd::UDUFactors g = spd::udu_decompose(Matrix(an * an.transpose()));
        const Vector target = (2.0 * a).array().exp();
        diag = std::max(diag, ((g.diag - target).array() / target.array()).abs().maxCoeff());
      }
      rep.add("spd.udu.reassembly." + D, "udu", reassembly, 0.0, reassembly, tol);
      rep.add("spd.udu.unit_upper." + D, "udu", lower, 0.0, lower, 0.0);
      rep.add("spd.udu.an_diagonal." + D, "udu", diag, 0.0, diag, tol);
    });

    guarded(rep, "spd.k_orbit.isospectral." + D, "k-orbit", tol, [&] {
      double iso = 0.0, rep_err = 0.0, order = 0.0;
      for (int i = 0; i < 200; ++i) {
        const SPDPoint p = S.point(d);
        const Matrix k = S.rotation(d);
        const SPDPoint kp = spd::congruence_action(lie::SLMatrix(k), p);
        const Vector e0 = spd::sorted_spectrum(p), e1 = spd::sorted_spectrum(kp);
        iso = std::max(iso, (e0 - e1).cwiseAbs().maxCoeff() / e0(0));
        const spd::KOrbitRepresentative r = spd::k_orbit_representative(p);
        const Matrix back = r.k.transpose() * p.matrix() * r.k;
        rep_err = std::max(rep_err, rel_matrix(back, r.diagonal.matrix()));
        for (int j = 0; j + 1 < d; ++j)
          order = std::max(order, r.diagonal.matrix()(j + 1, j + 1) - r.diagonal.matrix()(j, j));
      }
      rep.add("spd.k_orbit.isospectral." + D, "k-orbit", iso, 0.0, iso, tol);
      rep.add("spd.k_orbit.diagonal_representative." + D, "k-orbit", rep_err, 0.0, rep_err, tol);
      rep.add("spd.k_orbit.decreasing_diagonal." + D, "k-orbit", order, 0.0, std::max(0.0, order), 0.0);
    });

    guarded(rep, "spd.congruence.group_law." + D, "congruence-action", tol, [&] {
      double law = 0.0, det = 0.0, inv = 0.0, witness = 0.0, n_orbit = 0.0;
      for (int i = 0; i < 200; ++i) {
        const lie::SLMatrix g = S.sl(d), h = S.sl(d);
        const SPDPoint p = S.point(d);
        const SPDPoint lhs = spd::congruence_action(g, spd::congruence_action(h, p));
        const SPDPoint rhs = spd::congruence_action(g * h, p);
        law = std::max(law, rel_matrix(lhs.matrix(), rhs.matrix()));
        det = std::max(det, std::abs(spd::congruence_action(g, p).matrix().determinant() - 1.0));
        const Matrix X = S.symmetric(d), Y = S.symmetric(d);
        const Matrix gm = g.matrix();
        const double a = spd::trace_metric(p, X, Y);
        const double b = spd::trace_metric(spd::congruence_action(g, p), gm * X * gm.transpose(),
                                           gm * Y * gm.transpose());
        const double scale = std::sqrt(spd::trace_metric(p, X, X) * spd::trace_metric(p, Y, Y));
        inv = std::max(inv, std::abs(a - b) / scale);
        const lie::SLMatrix w = spd::transitivity_witness(p);
        witness = std::max(witness, rel_matrix(spd::congruence_action(w, SPDPoint::identity(d)).matrix(), p.matrix()));
        const Vector al = S.traceless(d);
        const Matrix n = S.unit_upper(d);
        const Matrix an = diag_exp(al) * n;
        n_orbit = std::max(n_orbit, rel_matrix(spd::n_orbit_point(al, n).matrix(), an * an.transpose()));
      }
      rep.add("spd.congruence.group_law." + D, "congruence-action", law, 0.0, law, tol);
      rep.add("spd.congruence.det_preserved." + D, "congruence-action", det, 0.0, det, tol);
      rep.add("spd.congruence.transitivity_witness." + D, "congruence-action", witness, 0.0, witness, tol);
      rep.add("spd.trace_metric.invariance." + D, "trace-metric", inv, 0.0, inv, tol);
      rep.add("spd.n_orbit.matches_product." + D, "n-orbit", n_orbit, 0.0, n_orbit, 1e-12);
    });

    guarded(rep, "spd.geodesic_symmetry.involution." + D, "geodesic-symmetry", sym_tol, [&] {
      double invol = 0.0, fixed = 0.0, at_identity = 0.0, deriv = 0.0, iso = 0.0;
      double positive = 1e300;
      for (int i = 0; i < 100; ++i) {
        const SPDPoint p = S.point(d), q = S.point(d);
        invol = std::max(invol, rel_matrix(spd::geodesic_symmetry(p, spd::geodesic_symmetry(p, q)).matrix(), q.matrix()));
        fixed = std::max(fixed, rel_matrix(spd::geodesic_symmetry(p, p).matrix(), p.matrix()));
        at_identity = std::max(at_identity, rel_matrix(spd::geodesic_symmetry(SPDPoint::identity(d), q).matrix(),
                                                       q.matrix().inverse()));
        Matrix Y = S.symmetric(d);
        Y -= (Y.trace() / d) * Matrix::Identity(d, d);
        const Matrix r = sqrtm(q.matrix());
        const Matrix X = r * Y * r;  // tangent of eps -> r exp(eps Y) r at eps = 0
        constexpr double h = 1e-5;
        auto curve = [&](double eps) { return SPDPoint(r * Matrix((eps * Y).exp()) * r); };
        const Matrix fd = (spd::geodesic_symmetry(p, curve(h)).matrix() -
                           spd::geodesic_symmetry(p, curve(-h)).matrix()) / (2.0 * h);
        const Matrix dsig = spd::geodesic_symmetry_differential(p, q, X);
        deriv = std::max(deriv, rel_matrix(fd, dsig));
        const double lhs = spd::trace_metric(spd::geodesic_symmetry(p, q), dsig, dsig);
        const double rhs = spd::trace_metric(q, X, X);
        iso = std::max(iso, std::abs(lhs - rhs) / rhs);
        positive = std::min(positive, spd::trace_metric(p, Y, Y));
      }
      rep.add("spd.geodesic_symmetry.involution." + D, "geodesic-symmetry", invol, 0.0, invol, sym_tol);
      rep.add("spd.geodesic_symmetry.fixed_point." + D, "geodesic-symmetry", fixed, 0.0, fixed, sym_tol);
      rep.add("spd.geodesic_symmetry.identity_inverse." + D, "geodesic-symmetry", at_identity, 0.0, at_identity, sym_tol);
      rep.add("spd.geodesic_symmetry.differential_fd." + D, "geodesic-symmetry", deriv, 0.0, deriv, 1e-6);
      rep.add("spd.geodesic_symmetry.isometry." + D, "geodesic-symmetry", iso, 0.0, iso, sym_tol);
      rep.add("spd.trace_metric.positive." + D, "trace-metric", positive, 0.0, positive > 0.0 ? 0.0 : 1.0, 0.0);
    });
  }

  {
    Matrix E11 = Matrix::Zero(3, 3);
    E11(0, 0) = 1.0;
    const double e11 = spd::trace_metric(SPDPoint::identity(3), E11, E11);
    rep.add("spd.trace_metric.identity_example", "trace-metric", e11, 1.0, std::abs(e11 - 1.0), 1e-15);
    const double u = 0.3, v = -0.7;
    Vector a(2);
    a << u, -u;
    Matrix n = Matrix::Identity(2, 2);
    n(0, 1) = v;
    Matrix expect(2, 2);
    expect << std::exp(2 * u) * (1 + v * v), v, v, std::exp(-2 * u);
    const double r = rel_matrix(spd::n_orbit_point(a, n).matrix(), expect);
    rep.add("spd.n_orbit.two_by_two_example", "n-orbit", r, 0.0, r, 1e-14);
    const spd::UDUFactors f = spd::udu_decompose(SPDPoint::identity(4));
    const double id = (f.u - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() + (f.diag - Vector::Ones(4)).cwiseAbs().maxCoeff();
    rep.add("spd.udu.identity_example", "udu", id, 0.0, id, 0.0);
  }

  // For d = 2 the N-orbit and the Nbar-orbit of a point meet only in the point.
  guarded(rep, "spd.n_orbits.intersection_d2", "n-orbit", 0.0, [&] {
    Matrix quarter(2, 2);
    quarter << 0.0, -1.0, 1.0, 0.0;  // conjugates N onto Nbar
    int wrong = 0;
    for (int i = 0; i < 50; ++i) {
      const SPDPoint p = S.point(2);
      const Vector a_n = 0.5 * spd::udu_decompose(p).diag.array().log();
      const Vector a_nbar =
          0.5 * spd::udu_decompose(Matrix(quarter.transpose() * p.matrix() * quarter)).diag.array().log();
      for (int k = -4; k <= 4; ++k) {
        Matrix n = Matrix::Identity(2, 2);
        n(0, 1) = 0.25 * k;
        const SPDPoint q = spd::congruence_action(lie::SLMatrix(n), p);
        const bool in_n = spd::horocycle_membership(q, Matrix::Identity(2, 2), a_n);
        const bool in_nbar = spd::horocycle_membership(q, quarter, a_nbar);
        if (!in_n || in_nbar != (k == 0)) ++wrong;
      }
    }
    rep.add("spd.n_orbits.intersection_d2", "n-orbit", wrong, 0.0, wrong, 0.0);
  });
  return rep;
}

}  // namespace horo::harness::detail
