#include "horo/transforms/test_function.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "horo/errors.hpp"

namespace horo::tr {

TestFunction::TestFunction(std::string label, Evaluator f, DiskPoint center, double support_radius)
    : label_(std::move(label)), f_(std::move(f)), center_(center), radius_(support_radius) {
  if (!(support_radius > 0.0)) throw DomainViolation("support radius must be positive");
}

NABox TestFunction::na_support() const {
  // In w = i(1+z)/(1-z) the ball is a Euclidean disk with center
  // (u_c, v_c cosh 2R) and radius v_c sinh 2R, and w = 2s + i e^{2t}.
  const auto st = disk::na_coordinates(center_);
  const double u_c = 2.0 * st.s;
  const double v_c = std::exp(2.0 * st.t);
  return {0.5 * (std::abs(u_c) + v_c * std::sinh(2.0 * radius_)), std::abs(st.t) + radius_};
}

TestFunction TestFunction::translated(const disk::SU11Element& g, std::string label) const {
  const disk::SU11Element ginv = g.inverse();
  Evaluator base = f_;
  Evaluator moved = [base, ginv](cd z) { return base(ginv.apply(z)); };
  if (label.empty()) label = label_ + ".translated";
  return TestFunction(std::move(label), std::move(moved), disk::mobius(g, center_), radius_);
}

// Smallest d with exp(-d^2 / (2 sigma^2) + 3 d) <= 1e-14, so the cut stays invisible
// against the e^{A} kernel and the e^{2d} volume growth.
double gaussian_support_radius(double sigma) {
  const double s2 = sigma * sigma;
  return 3.0 * s2 + std::sqrt(9.0 * s2 * s2 + 2.0 * s2 * std::log(1e14));
}

TestFunction gaussian_bump(std::string label, DiskPoint center, double sigma, cd amplitude,
                           double phase_frequency) {
  if (!(sigma > 0.0)) throw DomainViolation("bump width must be positive");
  const cd c = center.z();
  const double one_minus_c2 = 1.0 - std::norm(c);
  const double radius = gaussian_support_radius(sigma);
  const double cosh_cut = std::cosh(2.0 * radius);
  const double inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
  TestFunction::Evaluator f = [=](cd z) -> cd {
    const double denom = (1.0 - std::norm(z)) * one_minus_c2;
    if (!(denom > 0.0)) return 0.0;
    // cosh 2d(c, z) = 1 + 2|z - c|^2 / ((1 - |z|^2)(1 - |c|^2))
    const double ch = 1.0 + 2.0 * std::norm(z - c) / denom;
    if (ch >= cosh_cut) return 0.0;
    const double d = 0.5 * std::acosh(ch);
    const double g = std::exp(-d * d * inv_two_sigma2);
    if (phase_frequency == 0.0) return amplitude * g;
    return amplitude * g * std::polar(1.0, phase_frequency * z.real());
  };
  return TestFunction(std::move(label), std::move(f), center, radius);
}

TestFunction linear_combination(cd a, const TestFunction& f, cd b, const TestFunction& g,
                                std::string label) {
  // Enclosing ball centered at f's center.
  const double r = std::max(f.support_radius(),
                            disk::distance(f.center(), g.center()) + g.support_radius());
  TestFunction::Evaluator e = [a, f, b, g](cd z) { return a * f.at(z) + b * g.at(z); };
  if (label.empty()) label = f.label() + "+" + g.label();
  return TestFunction(std::move(label), std::move(e), f.center(), r);
}

TestFunction zero_function() {
  return TestFunction("zero", [](cd) { return cd(0.0); }, DiskPoint::origin(), 1.0);
}

TestFunction reference_bump() { return gaussian_bump("reference", DiskPoint::origin(), 0.45); }

std::vector<TestFunction> seeded_bumps(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TestFunction> out;
  for (int i = 0; i < count; ++i) {
    const double dist = 0.6 * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const double sigma = 0.4 + 0.15 * unit(rng);
    const double amp_mag = 0.5 + unit(rng);
    const double amp_arg = 2.0 * std::numbers::pi * unit(rng);
    const double omega = 2.0 * unit(rng) - 1.0;
    const DiskPoint c(std::polar(std::tanh(dist), angle));
    out.push_back(gaussian_bump("bump" + std::to_string(i), c, sigma, std::polar(amp_mag, amp_arg),
                                omega));
  }
  return out;
}

}  // namespace horo::tr
