#pragma once

#include <Eigen/Dense>

#include "horo/lie/sl.hpp"

namespace horo::spd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Symmetric positive definite with unit determinant.
class SPDPoint {
 public:
  explicit SPDPoint(Matrix p);
  static SPDPoint identity(int d) { return SPDPoint(Matrix::Identity(d, d)); }
  const Matrix& matrix() const { return p_; }
  int dim() const { return static_cast<int>(p_.rows()); }

 private:
  Matrix p_;
};

// p = u diag(diag) u^T, u unit upper triangular.
struct UDUFactors {
  Matrix u;
  Vector diag;
  Matrix reassemble() const { return u * diag.asDiagonal() * u.transpose(); }
};

SPDPoint congruence_action(const lie::SLMatrix& g, const SPDPoint& p);
// g = p^{1/2}, so that g[I] = p.
lie::SLMatrix transitivity_witness(const SPDPoint& p);
double trace_metric(const SPDPoint& p, const Matrix& X, const Matrix& Y);
SPDPoint geodesic_symmetry(const SPDPoint& p, const SPDPoint& q);
// Differential of sigma_p at q applied to a tangent X.
Matrix geodesic_symmetry_differential(const SPDPoint& p, const SPDPoint& q, const Matrix& X);

UDUFactors udu_decompose(const Matrix& p);
UDUFactors udu_decompose(const SPDPoint& p);

bool horocycle_membership(const SPDPoint& p, const Matrix& k, const Vector& a_log,
                          double tol = 1e-8);
// Residual max |diag_i - exp(2 a_i)|, relative.
double horocycle_membership_residual(const SPDPoint& p, const Matrix& k, const Vector& a_log);

// {e^{a_i + a_j} sum_{k >= max(i,j)} n_ik n_jk}; n is unit upper triangular.
SPDPoint n_orbit_point(const Vector& a_log, const Matrix& n);

Vector sorted_spectrum(const SPDPoint& p);  // decreasing
// The diagonal point with decreasing entries in the K-orbit of p, with the rotation k.
struct KOrbitRepresentative {
  SPDPoint diagonal;
  Matrix k;
};
KOrbitRepresentative k_orbit_representative(const SPDPoint& p);

}  // namespace horo::spd
