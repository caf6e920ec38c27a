#include "horo/harness/suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <ctime>

#include "horo/errors.hpp"
#include "horo/lie/su11.hpp"
#include "suite_common.hpp"

namespace horo::harness {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(VerificationReport& rep, const std::string& suite, const RunConfig& config) {
  rep.suite = suite;
  rep.seed = config.seed;
  rep.timestamp = utc_timestamp();
  const auto& g = config.grids;
  rep.environment = {
      {"grid_beta", g.n_beta},          {"grid_tau", g.tau.n},
      {"tau_max", g.tau.hi},            {"grid_lambda", g.lambda.n},
      {"lambda_max", g.lambda.hi},      {"horocycle_panels", g.horocycle.panels},
      {"horocycle_points", g.horocycle.points_per_panel},
      {"area_panels", g.area.panels},   {"area_points", g.area.points_per_panel},
      {"area_panel_scale", g.area_panel_scale},
      {"nbar_panels", config.nbar.panels},
      {"nbar_truncation", config.nbar.truncation},
      {"bumps", config.bumps},
  };
}

void record_calibration(VerificationReport& rep, const tr::Calibration& cal) {
  rep.calibration["c_N"] = cal.norm.c_N;
  rep.calibration["c_A"] = cal.norm.c_A;
  rep.calibration["kappa"] = cal.norm.kappa;
}

bool needs_calibration(const std::string& name) {
  return name != "structure" && name != "geometry" && name != "spd";
}

VerificationReport dispatch(const std::string& name, const RunConfig& config,
                            const tr::Calibration& cal) {
  if (name == "structure") return detail::structure_suite(config);
  if (name == "geometry") return detail::geometry_suite(config);
  if (name == "slice") return detail::slice_suite(config, cal);
  if (name == "plancherel") return detail::plancherel_suite(config, cal);
  if (name == "unitarity") return detail::unitarity_suite(config, cal);
  if (name == "intertwine") return detail::intertwine_suite(config, cal);
  if (name == "properties") return detail::properties_suite(config, cal);
  if (name == "spd") return detail::spd_suite(config);
  throw ConfigError("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"structure", "geometry",   "slice",      "plancherel",
                                                 "unitarity", "intertwine", "properties", "spd"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

tr::Calibration calibration_for(const RunConfig& config, bool with_refinement) {
  return tr::calibrate_measures(config.nbar, config.grids, with_refinement);
}

VerificationReport run_calibrate(const RunConfig& config) {
  VerificationReport rep;
  stamp(rep, "calibrate", config);
  detail::guarded(rep, "calibrate.c_N.refinement", "n-normalization", 1e-8, [&] {
    const tr::Calibration cal = calibration_for(config, true);
    record_calibration(rep, cal);
    rep.calibration["c_N_refinement_delta"] = cal.c_N_refinement_delta;
    rep.calibration["kappa_refinement_delta"] = cal.kappa_refinement_delta;
    rep.add("calibrate.c_N.refinement", "n-normalization", cal.norm.c_N,
            cal.norm.c_N + cal.c_N_refinement_delta, cal.c_N_refinement_delta, 1e-8);
    rep.add("calibrate.kappa.refinement", "plancherel-kappa", cal.norm.kappa,
            cal.norm.kappa + cal.kappa_refinement_delta, cal.kappa_refinement_delta, 1e-6);
    // c_A against B(H0, H0) = 4 tr(H0^2) from the trace form.
    const lie::Mat2 H0 = lie::su11_basis()[0];
    const double trace_form = std::sqrt(4.0 * (H0 * H0).trace().real() / (2.0 * std::numbers::pi));
    rep.add("calibrate.c_A.trace_form", "a-normalization", cal.norm.c_A, trace_form,
            detail::rel(cal.norm.c_A, trace_form), 1e-14);
    const bool finite = std::isfinite(cal.norm.c_N) && cal.norm.c_N > 0.0 &&
                        std::isfinite(cal.norm.kappa) && cal.norm.kappa > 0.0;
    rep.add("calibrate.constants.positive_finite", "n-normalization", finite ? 1.0 : 0.0, 1.0,
            finite ? 0.0 : 1.0, 0.0);
  });
  rep.normalize();
  return rep;
}

VerificationReport run_suite(const std::string& name, const RunConfig& config) {
  if (name != "all" && !is_suite(name)) throw ConfigError("unknown suite: " + name);
  bool calibrate = name == "all" || needs_calibration(name);
  tr::Calibration cal;
  if (calibrate) {
    try {
      cal = calibration_for(config, false);
    } catch (const TailToleranceExceeded& e) {
      VerificationReport rep;
      stamp(rep, name, config);
      rep.add_error("calibrate.measures", "n-normalization", std::string(kTailErrorPrefix) + e.what(), 0.0);
      return rep;
    } catch (const Error& e) {
      VerificationReport rep;
      stamp(rep, name, config);
      rep.add_error("calibrate.measures", "n-normalization", e.what(), 0.0);
      return rep;
    }
  }
  return run_suite(name, config, cal);
}

VerificationReport run_suite(const std::string& name, const RunConfig& config,
                             const tr::Calibration& calibration) {
  if (name != "all" && !is_suite(name)) throw ConfigError("unknown suite: " + name);
  VerificationReport rep;
  stamp(rep, name, config);
  if (name == "all") {
    record_calibration(rep, calibration);
    for (const auto& s : suite_names()) rep.merge(dispatch(s, config, calibration));
  } else {
    if (needs_calibration(name)) record_calibration(rep, calibration);
    rep.merge(dispatch(name, config, calibration));
  }
  rep.normalize();
  return rep;
}

}  // namespace horo::harness
