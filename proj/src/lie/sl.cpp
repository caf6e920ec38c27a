#include "horo/lie/sl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "horo/errors.hpp"

namespace horo::lie {

SLMatrix::SLMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw NonUnimodular("matrix must be square, d >= 2");
  const double det = m_.determinant();
  if (!(std::abs(det - 1.0) <= 1e-9))
    throw NonUnimodular("determinant " + std::to_string(det) + " is not 1");
}

SLMatrix SLMatrix::inverse() const { return SLMatrix(m_.inverse()); }

SLMatrix SLMatrix::operator*(const SLMatrix& other) const { return SLMatrix(m_ * other.m_); }

SLMatrix renormalize_det(const Matrix& m) {
  Matrix r = m;
  double det = r.determinant();
  if (det == 0.0 || !std::isfinite(det)) throw NonUnimodular("singular matrix");
  if (det < 0.0) {
    r.row(0) *= -1.0;
    det = -det;
  }
  r *= std::pow(det, -1.0 / static_cast<double>(r.rows()));
  return SLMatrix(r);
}

Matrix diag_exp(const Vector& a_log) { return a_log.array().exp().matrix().asDiagonal(); }

Matrix SLIwasawaKAN::reassemble() const { return k * diag_exp(a_log) * n; }
Matrix SLIwasawaNAK::reassemble() const { return n * diag_exp(a_log) * k; }

SLIwasawaKAN iwasawa_kan(const SLMatrix& g) {
  const Matrix& m = g.matrix();
  const int d = g.dim();
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    if (r(i, i) < 0.0) {
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }
  SLIwasawaKAN out;
  out.k = q;
  out.a_log.resize(d);
  out.n = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    out.a_log(i) = std::log(r(i, i));
    for (int j = i + 1; j < d; ++j) out.n(i, j) = r(i, j) / r(i, i);
  }
  return out;
}

SLIwasawaNAK iwasawa_nak(const SLMatrix& g) {
  // With J the reversal, (J g)^T = Q R gives g = (J R^T J)(J Q^T) where J R^T J
  // is upper triangular.
  const Matrix& m = g.matrix();
  const int d = g.dim();
  Matrix j = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) j(i, d - 1 - i) = 1.0;
  Matrix t = (j * m).transpose();
  Eigen::HouseholderQR<Matrix> qr(t);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    if (r(i, i) < 0.0) {
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }
  Matrix upper = j * r.transpose() * j;
  SLIwasawaNAK out;
  out.k = j * q.transpose();
  out.a_log.resize(d);
  out.n = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    out.a_log(i) = std::log(upper(i, i));
    for (int c = i + 1; c < d; ++c) out.n(i, c) = upper(i, c) / upper(c, c);
  }
  return out;
}

Matrix RestrictedRoot::root_vector(int d) const {
  Matrix e = Matrix::Zero(d, d);
  e(i - 1, j - 1) = 1.0;
  return e;
}

std::vector<RestrictedRoot> restricted_roots(int d) {
  std::vector<RestrictedRoot> out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (i != j) out.push_back({i, j, 1});
  return out;
}

std::vector<RestrictedRoot> positive_roots(int d) {
  std::vector<RestrictedRoot> out;
  for (const auto& r : restricted_roots(d))
    if (r.positive()) out.push_back(r);
  return out;
}

std::vector<RestrictedRoot> simple_roots(int d) {
  // A positive root is simple when it is not a sum of two positive roots.
  const auto pos = positive_roots(d);
  std::vector<RestrictedRoot> out;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& p : pos)
      for (const auto& q : pos)
        if (p.i == r.i && q.j == r.j && p.j == q.i) decomposable = true;
    if (!decomposable) out.push_back(r);
  }
  return out;
}

namespace {

void require_traceless(const Vector& H) {
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if (std::abs(H.sum()) > 1e-12 * scale) throw TraceNotZero("H must have zero trace");
}

}  // namespace

double rho(const Vector& H) {
  require_traceless(H);
  const int d = static_cast<int>(H.size());
  double acc = 0.0;
  for (int j = 1; j <= d; ++j) acc += ((d + 1) / 2.0 - j) * H(j - 1);
  return acc;
}

double rho_half_root_sum(const Vector& H) {
  require_traceless(H);
  double acc = 0.0;
  for (const auto& r : positive_roots(static_cast<int>(H.size()))) acc += r.multiplicity * r(H);
  return 0.5 * acc;
}

double modular_an(const Vector& a_log) { return std::exp(-2.0 * rho(a_log)); }

Vector weyl_act(const Permutation& w, const Vector& H) {
  Vector out(H.size());
  for (std::size_t i = 0; i < w.size(); ++i) out(w[i]) = H(static_cast<int>(i));
  return out;
}

std::vector<int> chamber_signature(const Vector& H) {
  std::vector<int> sig;
  for (const auto& r : positive_roots(static_cast<int>(H.size()))) {
    const double v = r(H);
    sig.push_back(v > 0.0 ? 1 : (v < 0.0 ? -1 : 0));
  }
  return sig;
}

std::size_t count_weyl_chambers(int d) {
  // A sign pattern on positive roots is realized by some regular H exactly when
  // the induced "H_i > H_j" relation is a transitive tournament.
  const auto pos = positive_roots(d);
  const std::size_t m = pos.size();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::vector<bool>> gt(d, std::vector<bool>(d, false));
    for (std::size_t r = 0; r < m; ++r) {
      const int i = pos[r].i - 1, j = pos[r].j - 1;
      if (mask & (std::size_t{1} << r))
        gt[i][j] = true;
      else
        gt[j][i] = true;
    }
    bool transitive = true;
    for (int a = 0; a < d && transitive; ++a)
      for (int b = 0; b < d && transitive; ++b)
        for (int c = 0; c < d && transitive; ++c)
          if (gt[a][b] && gt[b][c] && !gt[a][c]) transitive = false;
    if (transitive) ++count;
  }
  return count;
}

}  // namespace horo::lie
