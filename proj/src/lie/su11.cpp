#include "horo/lie/su11.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "horo/errors.hpp"

namespace horo::lie {

namespace {
constexpr cd I(0.0, 1.0);

double wrap_angle(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}
}  // namespace

SU11Element::SU11Element(cd a, cd b) : a_(a), b_(b) {
  const double na = std::norm(a), nb = std::norm(b);
  if (!(std::abs(na - nb - 1.0) <= 1e-12 * (na + nb)))
    throw NonUnimodular("|a|^2 - |b|^2 = " + std::to_string(na - nb) + " is not 1");
}

SU11Element SU11Element::rotation(double theta) {
  return SU11Element(std::polar(1.0, theta), cd(0.0), Unchecked{});
}

SU11Element SU11Element::boost(double t) {
  return SU11Element(cd(std::cosh(t)), cd(std::sinh(t)), Unchecked{});
}

SU11Element SU11Element::shear(double s) {
  return SU11Element(cd(1.0, s), cd(0.0, -s), Unchecked{});
}

Mat2 SU11Element::matrix() const {
  Mat2 m;
  m << a_, b_, std::conj(b_), std::conj(a_);
  return m;
}

SU11Element SU11Element::operator*(const SU11Element& o) const {
  return SU11Element(a_ * o.a_ + b_ * std::conj(o.b_), a_ * o.b_ + b_ * std::conj(o.a_),
                     Unchecked{});
}

SU11Element SU11Element::inverse() const { return SU11Element(std::conj(a_), -b_, Unchecked{}); }

cd SU11Element::apply(cd z) const { return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_)); }

SU11Element SU11Iwasawa::reassemble() const {
  return SU11Element::rotation(theta) * SU11Element::boost(t) * SU11Element::shear(s);
}

SU11Element SU11IwasawaNAK::reassemble() const {
  return SU11Element::shear(s) * SU11Element::boost(t) * SU11Element::rotation(theta);
}

SU11Iwasawa iwasawa_kan(const SU11Element& g) {
  // (a_t n_s)_11 + (a_t n_s)_12 = e^t, so a + b = e^{i theta} e^t.
  const cd sum = g.a() + g.b();
  SU11Iwasawa r;
  const double phase = std::arg(sum);
  r.t = std::log(std::abs(sum));
  // (a_t n_s)_11 = cosh t + i s e^t
  r.s = (std::polar(1.0, -phase) * g.a()).imag() * std::exp(-r.t);
  r.theta = wrap_angle(phase);
  return r;
}

NAPair na_coordinates(cd z) {
  // w = i(1+z)/(1-z) sends n_s a_t[o] to 2s + i e^{2t}.
  const cd w = I * (1.0 + z) / (1.0 - z);
  return {0.5 * w.real(), 0.5 * std::log(w.imag())};
}

cd na_point(double s, double t) {
  const cd w(2.0 * s, std::exp(2.0 * t));
  return (w - I) / (w + I);
}

SU11IwasawaNAK iwasawa_nak(const SU11Element& g) {
  const NAPair st = na_coordinates(g.apply(cd(0.0)));
  const SU11Element na = SU11Element::shear(st.s) * SU11Element::boost(st.t);
  const SU11Element k = na.inverse() * g;
  SU11IwasawaNAK r;
  r.s = st.s;
  r.t = st.t;
  r.theta = wrap_angle(std::arg(k.a()));
  return r;
}

cd cayley(cd z, CayleyDirection direction) {
  if (direction == CayleyDirection::DiskToHalfPlane) {
    if (!(std::abs(z) < 1.0)) throw DomainViolation("point is not in the open disk");
    return -I * (z + I) / (z - I);
  }
  if (!(z.imag() > 0.0)) throw DomainViolation("point is not in the upper half-plane");
  return (1.0 + I * z) / (z + I);
}

cd cayley_literal(cd z) { return I * (z + I) / (z - I); }

Mat2 cayley_matrix() {
  Mat2 c;
  c << -I, cd(1.0), cd(1.0), -I;
  return c;
}

std::array<Mat2, 3> su11_basis() {
  Mat2 h, x, k;
  h << 0.0, 1.0, 1.0, 0.0;
  x << I, -I, I, -I;
  k << I, 0.0, 0.0, -I;
  return {h, x, k};
}

namespace {

// Real coordinates of an su(1,1) element in su11_basis().
Eigen::Vector3d coordinates(const Mat2& Z) {
  // Z = p H0 + q X + r K0 = [[i(q+r), p - i q], [p + i q, -i(q+r)]]
  const double p = Z(0, 1).real();
  const double q = -Z(0, 1).imag();
  const double r = Z(0, 0).imag() - q;
  return {p, q, r};
}

Eigen::Matrix3d ad(const Mat2& X) {
  const auto basis = su11_basis();
  Eigen::Matrix3d m;
  for (int c = 0; c < 3; ++c) m.col(c) = coordinates(X * basis[c] - basis[c] * X);
  return m;
}

}  // namespace

double killing_form(const Mat2& X, const Mat2& Y) { return (ad(X) * ad(Y)).trace(); }

}  // namespace horo::lie
