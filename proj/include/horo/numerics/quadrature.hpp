#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace horo::num {

using cd = std::complex<double>;

enum class Rule { GaussLegendre, Trapezoid };

struct QuadratureSpec {
  Rule rule = Rule::GaussLegendre;
  int panels = 16;
  int points_per_panel = 8;
  double truncation = 8.0;
  double tail_tolerance = 1e-12;

  void validate() const;
  QuadratureSpec refined() const;  // twice the panels
  QuadratureSpec coarsened() const;  // half the panels (at least one)
};

struct NodeSet {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

// Gauss-Legendre nodes and weights on [-1, 1], ascending.
const NodeSet& gauss_legendre(int n);

// Composite rule on [lo, hi]. Trapezoid uses panels*points_per_panel intervals.
NodeSet composite_nodes(double lo, double hi, int panels, int points_per_panel, Rule rule);
NodeSet composite_nodes(double lo, double hi, const QuadratureSpec& spec);

struct QuadratureResult {
  cd value;
  double error_estimate = 0.0;
};

// Integrates over [-truncation, truncation]; the estimate compares against the
// half-panel rule.
QuadratureResult integrate_1d(const std::function<cd(double)>& f, const QuadratureSpec& spec);
QuadratureResult integrate_1d(const std::function<cd(double)>& f, double lo, double hi,
                              const QuadratureSpec& spec);

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(cd v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  cd value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

}  // namespace horo::num
