#include "horo/harness/plots.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "horo/disk/geometry.hpp"
#include "horo/errors.hpp"
#include "horo/harness/suites.hpp"
#include "horo/transforms/cfunction.hpp"
#include "horo/transforms/helgason.hpp"
#include "horo/transforms/radon.hpp"

namespace horo::harness {

namespace {

using tr::cd;

PlotData c_function_plot() {
  PlotData p{"c-function", {"lambda", "closed_form", "gamma_based"}, {}, {}};
  p.notes = {"lambda: spectral parameter on (0, 10]",
             "closed_form: (pi lambda / 2) tanh(pi lambda / 2)",
             "gamma_based: 1 / |c(lambda)|^2 with c from the Gamma-function expression"};
  constexpr int n = 200;
  for (int i = 1; i <= n; ++i) {
    const double l = 10.0 * i / n;
    p.rows.push_back({l, tr::c_abs_sq_inv(l), 1.0 / std::norm(tr::c_complex(l))});
  }
  return p;
}

PlotData horocycle_family_plot() {
  PlotData p{"horocycle-family",
             {"beta", "tau", "center_re", "center_im", "radius", "tangency_defect"},
             {},
             {}};
  p.notes = {"Euclidean circles of the horocycles with normal e^{i beta} at signed distance tau from o",
             "tangency_defect: | |center| + radius - 1 |, zero for circles tangent to the unit circle"};
  for (int k = -4; k <= 4; ++k) {
    const double tau = 0.5 * k;
    const disk::HorocycleParam h{disk::BoundaryPoint(0.0), tau};
    const auto c = disk::horocycle_circle(h, disk::DiskPoint::origin());
    p.rows.push_back({0.0, tau, c.center.real(), c.center.imag(), c.radius, c.tangency_defect()});
  }
  return p;
}

PlotData radon_profile_plot(const RunConfig& config) {
  const tr::TestFunction f = tr::seeded_bumps(config.seed, 1).front();
  const tr::Calibration cal = calibration_for(config);
  PlotData p{"radon-profile", {"tau", "re", "im", "abs"}, {}, {}};
  p.notes = {"Radon transform of the first seeded bump on the horocycles with normal e^{i beta}, beta = 0",
             "tau: signed distance of the horocycle from o; re, im, abs: value of Rf"};
  const auto taus = config.grids.tau.nodes();
  const auto col = tr::radon_column(f, 0.0, taus, cal.norm, config.grids.horocycle);
  for (std::size_t k = 0; k < taus.size(); ++k)
    p.rows.push_back({taus[k], col[k].real(), col[k].imag(), std::abs(col[k])});
  return p;
}

PlotData spectrum_plot(const RunConfig& config) {
  const tr::TestFunction f = tr::seeded_bumps(config.seed, 1).front();
  const tr::Calibration cal = calibration_for(config);
  PlotData p{"spectrum", {"lambda", "re", "im", "abs", "plancherel_density"}, {}, {}};
  p.notes = {"Helgason-Fourier transform of the first seeded bump at b = 1 on the lambda grid",
             "plancherel_density: |c(lambda)|^{-2} / 2"};
  const disk::BoundaryPoint b(0.0);
  for (int j = 0; j < config.grids.lambda.n; ++j) {
    const double l = config.grids.lambda.node(j);
    const cd h = tr::helgason_fourier(f, b, l, cal.norm, config.grids);
    p.rows.push_back({l, h.real(), h.imag(), std::abs(h), tr::c_abs_sq_inv(l) / tr::kWeylOrder});
  }
  return p;
}

}  // namespace

const std::vector<std::string>& plot_names() {
  static const std::vector<std::string> names = {"c-function", "horocycle-family", "radon-profile",
                                                 "spectrum"};
  return names;
}

PlotData make_plot(const std::string& what, const RunConfig& config) {
  if (what == "c-function") return c_function_plot();
  if (what == "horocycle-family") return horocycle_family_plot();
  if (what == "radon-profile") return radon_profile_plot(config);
  if (what == "spectrum") return spectrum_plot(config);
  throw ConfigError("unknown plot: " + what);
}

std::string plot_to_csv(const PlotData& data) {
  std::ostringstream out;
  out << "# " << data.what << "\n";
  for (const auto& n : data.notes) out << "# " << n << "\n";
  for (std::size_t i = 0; i < data.columns.size(); ++i) out << (i ? "," : "") << data.columns[i];
  out << "\n";
  char buf[40];
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json plot_to_json(const PlotData& data) {
  return {{"schema_version", 1},
          {"plot", data.what},
          {"notes", data.notes},
          {"columns", data.columns},
          {"rows", data.rows}};
}

void write_plot(const PlotData& data, const std::string& path, Format format) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << (format == Format::Csv ? plot_to_csv(data) : plot_to_json(data).dump(2) + "\n");
  if (!out) throw ConfigError("write failed for " + path);
}

}  // namespace horo::harness
