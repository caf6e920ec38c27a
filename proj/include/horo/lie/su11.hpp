#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace horo::lie {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

// [[a, b], [conj b, conj a]] with |a|^2 - |b|^2 = 1.
class SU11Element {
 public:
  SU11Element(cd a, cd b);

  static SU11Element identity() { return SU11Element(cd(1.0), cd(0.0)); }
  static SU11Element rotation(double theta);  // k_theta = diag(e^{i theta}, e^{-i theta})
  static SU11Element boost(double t);         // a_t
  static SU11Element shear(double s);         // n_s

  cd a() const { return a_; }
  cd b() const { return b_; }
  Mat2 matrix() const;

  SU11Element operator*(const SU11Element& o) const;
  SU11Element inverse() const;
  cd apply(cd z) const;  // (a z + b) / (conj(b) z + conj(a))

 private:
  struct Unchecked {};
  SU11Element(cd a, cd b, Unchecked) : a_(a), b_(b) {}
  cd a_, b_;
};

// g = k_theta a_t n_s
struct SU11Iwasawa {
  double theta = 0.0;
  double t = 0.0;
  double s = 0.0;
  SU11Element reassemble() const;
};

// g = n_s a_t k_theta
struct SU11IwasawaNAK {
  double s = 0.0;
  double t = 0.0;
  double theta = 0.0;
  SU11Element reassemble() const;
};

SU11Iwasawa iwasawa_kan(const SU11Element& g);
SU11IwasawaNAK iwasawa_nak(const SU11Element& g);

// (s, t) with n_s a_t [o] = z, closed form through the upper half-plane.
struct NAPair {
  double s = 0.0;
  double t = 0.0;
};
NAPair na_coordinates(cd z);
cd na_point(double s, double t);

enum class CayleyDirection { DiskToHalfPlane, HalfPlaneToDisk };

// c(z) = -i (z + i)/(z - i), mapping the disk onto the upper half-plane.
cd cayley(cd z, CayleyDirection direction);
// The unnormalized formula i (z + i)/(z - i); it lands in the lower half-plane.
cd cayley_literal(cd z);
Mat2 cayley_matrix();

// Basis H0, X (= log n_1), K0 of su(1,1) and the Killing form via ad matrices.
std::array<Mat2, 3> su11_basis();
double killing_form(const Mat2& X, const Mat2& Y);

}  // namespace horo::lie
