// Acceptance criteria: one PASS/FAIL line each. Argument 1 is the path of the horo executable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "horo/disk/geometry.hpp"
#include "horo/harness/config.hpp"
#include "horo/harness/report.hpp"
#include "horo/harness/suites.hpp"
#include "horo/transforms/cfunction.hpp"

namespace h = horo::harness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Records named prefix*: at least `count` present, all passing, worst residual below `limit`.
void require(Outcome& out, const h::VerificationReport& rep, const std::string& prefix,
             std::size_t count, double limit, const std::string& what) {
  std::size_t n = 0;
  double worst = 0.0;
  for (const auto& r : rep.records) {
    if (!starts_with(r.name, prefix)) continue;
    ++n;
    if (!r.pass) out.fail(r.name + (r.error.empty() ? " failed" : ": " + r.error));
    if (r.residual) worst = std::max(worst, *r.residual);
  }
  if (n < count)
    out.fail(what + ": expected " + std::to_string(count) + " records, found " + std::to_string(n));
  else if (!(worst < limit))
    out.fail(what + " residual " + fmt(worst) + " >= " + fmt(limit));
  else
    out.note(what + " " + fmt(worst));
}

void require_time(Outcome& out, double secs, double limit) {
  if (secs >= limit)
    out.fail("runtime " + fmt(secs) + " s >= " + fmt(limit) + " s");
  else
    out.note("runtime " + fmt(secs) + " s");
}

int failures = 0;

void report(int id, const std::string& title, const Outcome& out) {
  std::string detail;
  for (std::size_t i = 0; i < out.notes.size(); ++i) detail += (i ? "; " : "") + out.notes[i];
  std::printf("%s criterion %d: %s (%s)\n", out.pass ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

struct Timed {
  h::VerificationReport rep;
  double secs = 0.0;
};

Timed timed_suite(const std::string& name, const h::RunConfig& config) {
  const auto t0 = Clock::now();
  Timed t{h::run_suite(name, config), 0.0};
  t.secs = seconds_since(t0);
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_timestamp(const std::string& s) {
  static const std::regex re("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(s, re, "\"timestamp\": \"\"");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance PATH_TO_HORO\n");
    return 2;
  }
  const std::string horo = argv[1];
  const h::RunConfig config;

  {
    Outcome o;
    const auto t = timed_suite("structure", config);
    for (const char* d : {"sl2", "sl3", "sl4", "sl6", "su11"})
      require(o, t.rep, std::string("structure.") + d + ".kan.reassembly", 1, 1e-12,
              std::string(d) + " reassembly");
    require(o, t.rep, "structure.rho.closed_form", 1, 1e-12, "rho");
    require(o, t.rep, "structure.modular.homomorphism", 1, 1e-10, "modular homomorphism");
    require(o, t.rep, "structure.modular.ad_determinant", 1, 1e-10, "Ad determinant");
    require(o, t.rep, "structure.", t.rep.records.size(), 1.0, "all structure records");
    require_time(o, t.secs, 10.0);
    report(1, "Iwasawa, rho and modular checks", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("geometry", config);
    require(o, t.rep, "geometry.composite_distance.cocycle", 1, 1e-10, "cocycle");
    require(o, t.rep, "geometry.composite_distance.g_invariance", 1, 1e-10, "G-invariance");
    require(o, t.rep, "geometry.boundary_measure.total_mass", 1, 1e-8, "total mass");
    require(o, t.rep, "geometry.boundary_measure.quasi_invariance", 1, 1e-8, "quasi-invariance");
    require(o, t.rep, "geometry.boundary_measure.dual_relation", 1, 1e-8, "dual relation");
    // N-orbit of o against the stated circle: center 1/2, radius 1/4.
    double worst = 0.0;
    const horo::disk::HorocycleParam xi{horo::disk::BoundaryPoint(0.0), 0.0};
    for (double s = -5.0; s <= 5.0; s += 0.25) {
      const auto p = horo::disk::horocycle_point(xi, horo::disk::DiskPoint::origin(), s);
      worst = std::max(worst, std::abs(std::abs(p.z() - 0.5) - 0.25));
    }
    if (!(worst < 1e-10))
      o.fail("N-orbit of o is off the circle |z - 1/2| = 1/4 by " + fmt(worst) +
             " (it lies on |z - 1/2| = 1/2, see geometry.horocycle.n_orbit_of_origin_*)");
    require(o, t.rep, "geometry.horocycle.n_orbit_of_origin", 1, 1e-10, "radius-1/2 circle");
    require_time(o, t.secs, 30.0);
    report(2, "cocycle, invariance, boundary measures, N-orbit circle", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("slice", config);
    require(o, t.rep, "slice.fourier_slice.default.", 5, 1e-3, "default grid");
    require(o, t.rep, "slice.fourier_slice.doubled.", 5, 1e-4, "doubled grid");
    require_time(o, t.secs, 120.0);
    report(3, "Fourier slice theorem", o);
  }

  {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
      const double l = 0.05 * std::pow(1000.0, static_cast<double>(i) / (n - 1));
      const double closed = 0.5 * std::numbers::pi * l * std::tanh(0.5 * std::numbers::pi * l);
      const double gamma_based = 1.0 / std::norm(horo::tr::c_function(l).c_complex);
      worst = std::max(worst, std::abs(gamma_based - closed) / closed);
    }
    const double secs = seconds_since(t0);
    if (!(worst < 1e-9))
      o.fail("relative error " + fmt(worst));
    else
      o.note("relative error " + fmt(worst) + " on 2000 points");
    require_time(o, secs, 1.0);
    report(4, "c-function Gamma form vs closed form on [0.05, 50]", o);
  }

  const auto plan = timed_suite("plancherel", config);
  {
    Outcome o;
    require(o, plan.rep, "plancherel.identity.", 5, 1e-3, "Plancherel identity");
    require(o, plan.rep, "plancherel.kappa.function_independence", 1, 1e-3, "kappa spread");
    report(5, "Plancherel formula with calibrated kappa", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("unitarity", config);
    require(o, t.rep, "unitarity.isometry.", 5, 1e-3, "norm ratio defect");
    require(o, t.rep, "unitarity.refinement.", 5, 1.0, "defect ladder");
    report(6, "unitarity of Q and refinement behaviour", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("intertwine", config);
    for (const char* g : {"k", "a", "n"}) {
      require(o, t.rep, std::string("intertwine.radon.bump0.") + g, 1, 1e-3, std::string("R ") + g);
      require(o, t.rep, std::string("intertwine.q.bump0.") + g, 1, 1e-3, std::string("Q ") + g);
    }
    require(o, t.rep, "intertwine.radon.bump", 6, 1e-3, "R all");
    require(o, t.rep, "intertwine.q.bump", 6, 1e-3, "Q all");
    report(7, "intertwining of R and Q", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("properties", config);
    require(o, t.rep, "properties.sharp.helgason.", 1, 1e-3, "sharp Hf");
    require(o, t.rep, "properties.flat.radon.", 1, 1e-3, "flat Rf");
    require(o, t.rep, "properties.flat.q.", 1, 1e-3, "flat Qf");
    const auto* ctrl = t.rep.find("properties.sharp.odd_profile_control");
    if (!ctrl)
      o.fail("positive control missing");
    else if (!(ctrl->lhs > 0.1))
      o.fail("positive control defect " + fmt(ctrl->lhs));
    else
      o.note("control defect " + fmt(ctrl->lhs));
    report(8, "properties sharp and flat", o);
  }

  {
    Outcome o;
    const auto t = timed_suite("spd", config);
    for (const char* d : {"d2", "d3", "d5"}) {
      require(o, t.rep, std::string("spd.horocycle.membership.") + d, 1, 1.0, std::string("membership ") + d);
      require(o, t.rep, std::string("spd.horocycle.perturbed_rejected.") + d, 1, 1.0,
              std::string("rejection ") + d);
    }
    require(o, t.rep, "spd.udu.reassembly.", 3, 1e-10, "UDU reassembly");
    require(o, t.rep, "spd.k_orbit.isospectral.", 3, 1e-10, "iso-spectrality");
    require_time(o, t.secs, 20.0);
    report(9, "SP(d) horocycles, UDU and K-orbits", o);
  }

  {
    Outcome o;
    std::vector<std::string> bytes;
    std::vector<int> codes;
    for (int run = 0; run < 2; ++run) {
      const std::string out = "acceptance_all_" + std::to_string(run) + ".json";
      const std::string cmd = "\"" + horo + "\" verify all --out " + out + " 2>/dev/null";
      const auto t0 = Clock::now();
      const int rc = std::system(cmd.c_str());
      const double secs = seconds_since(t0);
      codes.push_back(rc);
      bytes.push_back(slurp(out));
      std::remove(out.c_str());
      if (secs >= 300.0) o.fail("run " + std::to_string(run + 1) + " took " + fmt(secs) + " s");
      else o.note("run " + std::to_string(run + 1) + " " + fmt(secs) + " s");
    }
    if (codes[0] != 0) o.fail("verify all exit status " + std::to_string(codes[0]));
    if (bytes[0].empty()) o.fail("no report written");
    if (strip_timestamp(bytes[0]) != strip_timestamp(bytes[1]))
      o.fail("report bytes differ between runs");
    else
      o.note("identical reports");
    report(10, "full battery runtime and determinism", o);
  }

  return failures == 0 ? 0 : 1;
}
