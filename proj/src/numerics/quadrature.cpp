#include "horo/numerics/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "horo/errors.hpp"

namespace horo::num {

void QuadratureSpec::validate() const {
  if (panels < 1) throw ConfigError("quadrature panels must be >= 1");
  if (points_per_panel < 2) throw ConfigError("quadrature points_per_panel must be >= 2");
  if (!(truncation > 0.0)) throw ConfigError("quadrature truncation must be positive");
  if (!(tail_tolerance > 0.0)) throw ConfigError("quadrature tail_tolerance must be positive");
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec s = *this;
  s.panels *= 2;
  return s;
}

QuadratureSpec QuadratureSpec::coarsened() const {
  QuadratureSpec s = *this;
  s.panels = panels > 1 ? panels / 2 : 1;
  return s;
}

namespace {

NodeSet compute_gauss_legendre(int n) {
  NodeSet r;
  r.x.assign(n, 0.0);
  r.w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

}  // namespace

const NodeSet& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, NodeSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

NodeSet composite_nodes(double lo, double hi, int panels, int points_per_panel, Rule rule) {
  NodeSet out;
  if (rule == Rule::Trapezoid) {
    const int m = panels * points_per_panel;
    const double h = (hi - lo) / m;
    out.x.resize(m + 1);
    out.w.resize(m + 1);
    for (int k = 0; k <= m; ++k) {
      out.x[k] = lo + k * h;
      out.w[k] = (k == 0 || k == m) ? 0.5 * h : h;
    }
    return out;
  }
  const NodeSet& gl = gauss_legendre(points_per_panel);
  const double ph = (hi - lo) / panels;
  out.x.reserve(static_cast<std::size_t>(panels) * points_per_panel);
  out.w.reserve(out.x.capacity());
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * ph;
    const double mid = a + 0.5 * ph;
    for (int k = 0; k < points_per_panel; ++k) {
      out.x.push_back(mid + 0.5 * ph * gl.x[k]);
      out.w.push_back(0.5 * ph * gl.w[k]);
    }
  }
  return out;
}

NodeSet composite_nodes(double lo, double hi, const QuadratureSpec& spec) {
  return composite_nodes(lo, hi, spec.panels, spec.points_per_panel, spec.rule);
}

namespace {

cd apply_rule(const std::function<cd(double)>& f, const NodeSet& nodes) {
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(nodes.w[i] * f(nodes.x[i]));
  return acc.value();
}

}  // namespace

QuadratureResult integrate_1d(const std::function<cd(double)>& f, double lo, double hi,
                              const QuadratureSpec& spec) {
  spec.validate();
  const double edge = std::max(std::abs(f(lo)), std::abs(f(hi)));
  if (edge > spec.tail_tolerance)
    throw TailToleranceExceeded("integrand magnitude " + std::to_string(edge) +
                                " at truncation edge exceeds tail tolerance");
  QuadratureResult r;
  r.value = apply_rule(f, composite_nodes(lo, hi, spec));
  const QuadratureSpec coarse = spec.coarsened();
  if (coarse.panels == spec.panels) {
    QuadratureSpec c2 = spec;
    c2.points_per_panel = std::max(2, spec.points_per_panel / 2);
    r.error_estimate = std::abs(r.value - apply_rule(f, composite_nodes(lo, hi, c2)));
  } else {
    r.error_estimate = std::abs(r.value - apply_rule(f, composite_nodes(lo, hi, coarse)));
  }
  return r;
}

QuadratureResult integrate_1d(const std::function<cd(double)>& f, const QuadratureSpec& spec) {
  return integrate_1d(f, -spec.truncation, spec.truncation, spec);
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    comp_ += (sum_ - t) + v;
  else
    comp_ += (v - t) + sum_;
  sum_ = t;
}

}  // namespace horo::num
