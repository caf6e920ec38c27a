#include "horo/spd/spd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "horo/errors.hpp"

namespace horo::spd {

namespace {

void require_symmetric(const Matrix& m, double tol, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.rows() != m.cols() || (m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw NonSymmetricTangent(std::string(what) + " is not symmetric");
}

Matrix reversal(int d) {
  Matrix j = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) j(i, d - 1 - i) = 1.0;
  return j;
}

}  // namespace

SPDPoint::SPDPoint(Matrix p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols()) throw NotPositiveDefinite("matrix must be square");
  const double scale = std::max(1.0, p_.cwiseAbs().maxCoeff());
  if ((p_ - p_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw NotPositiveDefinite("matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(p_, Eigen::EigenvaluesOnly);
  const Vector ev = es.eigenvalues();
  if (!(ev.minCoeff() > 1e-10 * ev.maxCoeff()) || !(ev.maxCoeff() > 0.0))
    throw NotPositiveDefinite("matrix is not positive definite");
  const double log_det = ev.array().log().sum();
  const double cond = ev.maxCoeff() / ev.minCoeff();
  if (!(std::abs(log_det) <= 1e-12 * p_.rows() * std::max(1.0, cond)))
    throw NotPositiveDefinite("determinant " + std::to_string(std::exp(log_det)) + " is not 1");
}

SPDPoint congruence_action(const lie::SLMatrix& g, const SPDPoint& p) {
  Matrix r = g.matrix() * p.matrix() * g.matrix().transpose();
  r = 0.5 * (r + r.transpose());
  return SPDPoint(r);
}

lie::SLMatrix transitivity_witness(const SPDPoint& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.matrix());
  const Matrix root = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
                      es.eigenvectors().transpose();
  return lie::SLMatrix(root);
}

double trace_metric(const SPDPoint& p, const Matrix& X, const Matrix& Y) {
  require_symmetric(X, 1e-12, "tangent X");
  require_symmetric(Y, 1e-12, "tangent Y");
  const Eigen::LDLT<Matrix> ldlt(p.matrix());
  return (ldlt.solve(X) * ldlt.solve(Y)).trace();
}

SPDPoint geodesic_symmetry(const SPDPoint& p, const SPDPoint& q) {
  const Matrix& pm = p.matrix();
  Matrix r = pm * q.matrix().ldlt().solve(pm);
  r = 0.5 * (r + r.transpose());
  return SPDPoint(r);
}

Matrix geodesic_symmetry_differential(const SPDPoint& p, const SPDPoint& q, const Matrix& X) {
  const Matrix qi = q.matrix().inverse();
  return -p.matrix() * qi * X * qi * p.matrix();
}

UDUFactors udu_decompose(const Matrix& p) {
  const int d = static_cast<int>(p.rows());
  const Matrix j = reversal(d);
  Eigen::LLT<Matrix> llt(j * p * j);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("factorization failed");
  // J p J = L L^T  =>  p = (J L J)(J L J)^T with J L J upper triangular.
  const Matrix upper = j * Matrix(llt.matrixL()) * j;
  UDUFactors f;
  f.diag.resize(d);
  f.u = Matrix::Identity(d, d);
  for (int c = 0; c < d; ++c) {
    const double dc = upper(c, c);
    f.diag(c) = dc * dc;
    for (int r = 0; r < c; ++r) f.u(r, c) = upper(r, c) / dc;
  }
  return f;
}

UDUFactors udu_decompose(const SPDPoint& p) { return udu_decompose(p.matrix()); }

double horocycle_membership_residual(const SPDPoint& p, const Matrix& k, const Vector& a_log) {
  const UDUFactors f = udu_decompose(Matrix(k.transpose() * p.matrix() * k));
  const Vector target = (2.0 * a_log).array().exp();
  return ((f.diag - target).array() / target.array()).abs().maxCoeff();
}

bool horocycle_membership(const SPDPoint& p, const Matrix& k, const Vector& a_log, double tol) {
  return horocycle_membership_residual(p, k, a_log) <= tol;
}

SPDPoint n_orbit_point(const Vector& a_log, const Matrix& n) {
  const int d = static_cast<int>(a_log.size());
  Matrix p(d, d);
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < d; ++jj) {
      double acc = 0.0;
      for (int k = std::max(i, jj); k < d; ++k) acc += n(i, k) * n(jj, k);
      p(i, jj) = std::exp(a_log(i) + a_log(jj)) * acc;
    }
  return SPDPoint(p);
}

Vector sorted_spectrum(const SPDPoint& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.matrix(), Eigen::EigenvaluesOnly);
  Vector ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
  return ev;
}

KOrbitRepresentative k_orbit_representative(const SPDPoint& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.matrix());
  const int d = p.dim();
  Matrix k(d, d);
  Vector ev(d);
  for (int i = 0; i < d; ++i) {
    k.col(i) = es.eigenvectors().col(d - 1 - i);
    ev(i) = es.eigenvalues()(d - 1 - i);
  }
  if (k.determinant() < 0.0) k.col(0) *= -1.0;
  // p = k D k^T, so k^T [p] = D.
  return {SPDPoint(Matrix(ev.asDiagonal())), k};
}

}  // namespace horo::spd
