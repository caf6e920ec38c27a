#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "horo/errors.hpp"
#include "horo/harness/config.hpp"
#include "horo/harness/plots.hpp"
#include "horo/harness/report.hpp"
#include "horo/harness/suites.hpp"

namespace h = horo::harness;

namespace {

struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;
};

void add_option(CLI::App* app, Overrides& o, const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
      "--" + key, [&o, key](const std::string& v) { o.values[key] = v; }, help);
}

void add_run_options(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "flat key = value config file");
  add_option(app, o, "seed", "seed for the test objects");
  add_option(app, o, "grid-beta", "boundary grid size");
  add_option(app, o, "grid-tau", "tau grid size");
  add_option(app, o, "grid-lambda", "lambda grid size");
  add_option(app, o, "tau-max", "tau grid half-width");
  add_option(app, o, "lambda-max", "lambda grid half-width");
  add_option(app, o, "horocycle-panels", "panels along each horocycle");
  add_option(app, o, "area-panels", "panels per area chart axis");
  add_option(app, o, "nbar-truncation", "truncation of the normalization integral");
  add_option(app, o, "bumps", "number of seeded bumps");
  add_option(app, o, "out", "output path (stdout when absent)");
  add_option(app, o, "format", "json or csv");
  for (const char* t : {"slice", "slice-doubled", "fourier", "cfunction", "kappa", "plancherel",
                        "unitarity", "intertwine", "properties", "spd", "spd-symmetry"})
    add_option(app, o, std::string("tol-") + t, "tolerance override");
}

h::RunConfig build_config(const Overrides& o) {
  h::RunConfig config;
  std::string path = h::config_path_from_env();
  if (path.empty()) path = o.config_path;
  if (!path.empty()) h::load_config_file(config, path);
  for (const auto& [k, v] : o.values) config.set(k, v);
  config.validate();
  return config;
}

void emit_report(const h::VerificationReport& report, const h::RunConfig& config) {
  const std::string text =
      config.format == h::Format::Json ? h::to_json_string(report) : h::to_csv(report);
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw horo::ConfigError("cannot write " + config.output);
  out << text;
}

int exit_code(const h::VerificationReport& report) {
  if (h::has_tail_error(report)) return 2;
  return report.all_pass() ? 0 : 1;
}

void summarize(const h::VerificationReport& report) {
  std::fprintf(stderr, "%s: %zu records, %zu failed\n", report.suite.c_str(),
               report.records.size(), report.failures());
  for (const auto& r : report.records)
    if (!r.pass) {
      if (r.residual)
        std::fprintf(stderr, "  FAIL %s residual %.3e tol %.3e\n", r.name.c_str(), *r.residual,
                     r.tolerance);
      else
        std::fprintf(stderr, "  FAIL %s error %s\n", r.name.c_str(), r.error.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horocyclic Radon and Helgason-Fourier verification"};
  app.require_subcommand(1);

  Overrides cal_o, verify_o, plot_o;
  std::string suite, what;

  auto* cal = app.add_subcommand("calibrate", "compute c_N, c_A, kappa and refinement deltas");
  add_run_options(cal, cal_o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or all")->required();
  add_run_options(verify, verify_o);

  auto* plot = app.add_subcommand("emit-plot", "write plot data");
  plot->add_option("what", what, "c-function, horocycle-family, radon-profile or spectrum")
      ->required();
  add_run_options(plot, plot_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cal) {
      const auto config = build_config(cal_o);
      const auto report = h::run_calibrate(config);
      emit_report(report, config);
      summarize(report);
      return exit_code(report);
    }
    if (*verify) {
      if (suite != "all" && !h::is_suite(suite)) throw horo::ConfigError("unknown suite " + suite);
      const auto config = build_config(verify_o);
      const auto report = h::run_suite(suite, config);
      emit_report(report, config);
      summarize(report);
      return exit_code(report);
    }
    if (*plot) {
      const auto config = build_config(plot_o);
      if (config.output.empty()) throw horo::ConfigError("emit-plot needs --out");
      const auto data = h::make_plot(what, config);
      h::write_plot(data, config.output, config.format);
      return 0;
    }
  } catch (const horo::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
