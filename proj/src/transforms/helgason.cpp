#include "horo/transforms/helgason.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "horo/errors.hpp"

namespace horo::tr {

namespace {

int panels_for(double width, int minimum, double max_panel_width) {
  return std::max(minimum, static_cast<int>(std::ceil(width / max_panel_width)));
}

double t_panel_width(const TransformGrids& grids) {
  return std::min(0.5, grids.area_panel_scale / grids.lambda_max());
}

}  // namespace

AreaNodes area_nodes(const TestFunction& f, const MeasureNormalization& norm,
                     const num::QuadratureSpec& area, double max_panel_width, double beta) {
  const double R = f.support_radius();
  const double cosh2R = std::cosh(2.0 * R);
  const disk::SU11Element kb = disk::BoundaryPoint(beta).representative();
  const disk::SU11Element chart =
      kb * disk::borel_section(disk::mobius(kb.inverse(), f.center()));
  const double C = norm.c_N * norm.c_A;
  AreaNodes out;
  const num::NodeSet tn = num::composite_nodes(
      -R, R, panels_for(2.0 * R, area.panels, max_panel_width), area.points_per_panel, area.rule);
  for (std::size_t a = 0; a < tn.size(); ++a) {
    const double t = tn.x[a];
    // cosh 2d(o, n_s a_t [o]) = cosh 2t + 2 sinh^2 u
    const double arg = 0.5 * (cosh2R - std::cosh(2.0 * t));
    if (!(arg > 0.0)) continue;
    const double u_max = std::asinh(std::sqrt(arg));
    const num::NodeSet un = num::composite_nodes(-u_max, u_max, panels_for(2.0 * u_max, area.panels, 0.5),
                                                 area.points_per_panel, area.rule);
    const double et = std::exp(t);
    out.row_start.push_back(out.z.size());
    for (std::size_t b = 0; b < un.size(); ++b) {
      const double u = un.x[b];
      out.z.push_back(chart.apply(lie::na_point(et * std::sinh(u), t)));
      out.w.push_back(C * tn.w[a] * un.w[b] * std::cosh(u) / et);
    }
  }
  out.row_start.push_back(out.z.size());
  return out;
}

AreaNodes area_nodes(const TestFunction& f, const MeasureNormalization& norm,
                     const TransformGrids& grids, double beta) {
  return area_nodes(f, norm, grids.area, t_panel_width(grids), beta);
}

cd inner_product_x(const TestFunction& f1, const TestFunction& f2,
                   const MeasureNormalization& norm, const TransformGrids& grids) {
  const AreaNodes nodes = area_nodes(f1, norm, grids);
  num::CompensatedComplexSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc.add(nodes.w[i] * f1.at(nodes.z[i]) * std::conj(f2.at(nodes.z[i])));
  return acc.value();
}

double norm_x(const TestFunction& f, const MeasureNormalization& norm, const TransformGrids& grids) {
  return std::sqrt(std::abs(inner_product_x(f, f, norm, grids)));
}

namespace {

// Rows of the chart adapted to b lie on horocycles with normal b, so the
// kernel is constant along each row.
struct RowMarginals {
  std::vector<double> A;  // A_o(x, b) on the row, evaluated at its middle node
  std::vector<cd> mass;   // sum of weight * f over the row
};

RowMarginals row_marginals(const TestFunction& f, double beta, const MeasureNormalization& norm,
                           const TransformGrids& grids) {
  const AreaNodes nodes = area_nodes(f, norm, grids, beta);
  const disk::BoundaryPoint b(beta);
  RowMarginals out;
  for (std::size_t r = 0; r + 1 < nodes.row_start.size(); ++r) {
    const std::size_t lo = nodes.row_start[r], hi = nodes.row_start[r + 1];
    num::CompensatedComplexSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(nodes.w[i] * f.at(nodes.z[i]));
    if (acc.value() == cd(0.0)) continue;
    out.A.push_back(disk::composite_distance(DiskPoint(nodes.z[(lo + hi) / 2]), b));
    out.mass.push_back(acc.value());
  }
  return out;
}

constexpr int kReseed = 64;

// H(lambda_j) = sum_r mass_r e^{(1 - i lambda_j) A_r}, using a per-row phase
// recurrence in lambda reseeded every kReseed steps.
void helgason_row(const RowMarginals& rm, const num::LineGrid& lambda, cd* out) {
  const std::size_t m = rm.A.size();
  std::vector<double> base_re(m), base_im(m), step_re(m), step_im(m), cur_re(m), cur_im(m);
  for (std::size_t i = 0; i < m; ++i) {
    const cd base = rm.mass[i] * std::exp(rm.A[i]);
    base_re[i] = base.real();
    base_im[i] = base.imag();
    const cd st = std::polar(1.0, -lambda.step() * rm.A[i]);
    step_re[i] = st.real();
    step_im[i] = st.imag();
  }
  for (int j = 0; j < lambda.n; ++j) {
    if (j % kReseed == 0) {
      const double l = lambda.node(j);
      for (std::size_t i = 0; i < m; ++i) {
        const cd c = cd(base_re[i], base_im[i]) * std::polar(1.0, -l * rm.A[i]);
        cur_re[i] = c.real();
        cur_im[i] = c.imag();
      }
    }
    double sr = 0.0, si = 0.0;
    double* __restrict cr = cur_re.data();
    double* __restrict ci = cur_im.data();
    const double* __restrict pr = step_re.data();
    const double* __restrict pi = step_im.data();
#pragma omp simd reduction(+ : sr, si)
    for (std::size_t i = 0; i < m; ++i) {
      sr += cr[i];
      si += ci[i];
      const double nr = cr[i] * pr[i] - ci[i] * pi[i];
      const double ni = cr[i] * pi[i] + ci[i] * pr[i];
      cr[i] = nr;
      ci[i] = ni;
    }
    out[j] = cd(sr, si);
  }
}

cd direct_sum(const RowMarginals& rm, double lambda) {
  num::CompensatedComplexSum acc;
  for (std::size_t r = 0; r < rm.A.size(); ++r) acc.add(rm.mass[r] * std::exp(cd(1.0, -lambda) * rm.A[r]));
  return acc.value();
}

}  // namespace

cd helgason_fourier(const TestFunction& f, const disk::BoundaryPoint& b, double lambda,
                    const MeasureNormalization& norm, const TransformGrids& grids) {
  return direct_sum(row_marginals(f, b.beta(), norm, grids), lambda);
}

SpectralFunction helgason_grid(const TestFunction& f, const MeasureNormalization& norm,
                               const TransformGrids& grids) {
  SpectralFunction S(grids.n_beta, grids.lambda);
  const int nb = grids.n_beta;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < nb; ++i) {
    try {
      helgason_row(row_marginals(f, S.beta(i), norm, grids), S.lambda,
                   S.samples.data() + static_cast<std::size_t>(i) * S.lambda.n);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return S;
}

namespace serial {

SpectralFunction helgason_grid(const TestFunction& f, const MeasureNormalization& norm,
                               const TransformGrids& grids) {
  SpectralFunction S(grids.n_beta, grids.lambda);
  for (int i = 0; i < grids.n_beta; ++i) {
    const RowMarginals rm = row_marginals(f, S.beta(i), norm, grids);
    for (int j = 0; j < S.lambda.n; ++j) S.at(i, j) = direct_sum(rm, S.lambda.node(j));
  }
  return S;
}

}  // namespace serial

}  // namespace horo::tr
