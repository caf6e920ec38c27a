#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace horo::lie {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class SLMatrix {
 public:
  // Rejects |det - 1| > 1e-9.
  explicit SLMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  SLMatrix inverse() const;
  SLMatrix operator*(const SLMatrix& other) const;

 private:
  Matrix m_;
};

// Scales a square matrix with nonzero determinant onto det = 1 (flipping the
// first row if the determinant is negative).
SLMatrix renormalize_det(const Matrix& m);

struct SLIwasawaKAN {
  Matrix k;
  Vector a_log;
  Matrix n;
  Matrix reassemble() const;
};

struct SLIwasawaNAK {
  Matrix n;
  Vector a_log;
  Matrix k;
  Matrix reassemble() const;
};

SLIwasawaKAN iwasawa_kan(const SLMatrix& g);
SLIwasawaNAK iwasawa_nak(const SLMatrix& g);

// Root alpha_ij = e_i - e_j, indices 1-based.
struct RestrictedRoot {
  int i = 1;
  int j = 2;
  int multiplicity = 1;

  bool positive() const { return i < j; }
  double operator()(const Vector& H) const { return H(i - 1) - H(j - 1); }
  Matrix root_vector(int d) const;  // E_ij
  bool operator==(const RestrictedRoot&) const = default;
};

std::vector<RestrictedRoot> restricted_roots(int d);
std::vector<RestrictedRoot> positive_roots(int d);
std::vector<RestrictedRoot> simple_roots(int d);

double rho(const Vector& H);             // closed form
double rho_half_root_sum(const Vector& H);  // (1/2) sum over positive roots
double modular_an(const Vector& a_log);  // exp(-2 rho)

// Weyl group of SL(d) as permutations of the diagonal.
using Permutation = std::vector<int>;
Vector weyl_act(const Permutation& w, const Vector& H);
std::vector<int> chamber_signature(const Vector& H);  // sign of alpha(H), alpha positive
std::size_t count_weyl_chambers(int d);

Matrix diag_exp(const Vector& a_log);

}  // namespace horo::lie
