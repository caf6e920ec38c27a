#include "horo/harness/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "horo/errors.hpp"
#include "horo/transforms/measures.hpp"

namespace horo::harness {

RunConfig::RunConfig() : nbar(tr::default_nbar_spec()) {}

double RunConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": " + v);
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != static_cast<int>(d)) throw ConfigError("bad integer value for " + key + ": " + v);
  return static_cast<int>(d);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "seed") {
    try {
      seed = std::stoull(value);
    } catch (const std::exception&) {
      throw ConfigError("bad seed: " + value);
    }
  } else if (key == "grid-beta") {
    grids.n_beta = to_int(key, value);
  } else if (key == "grid-tau") {
    grids.tau.n = to_int(key, value);
  } else if (key == "grid-lambda") {
    grids.lambda.n = to_int(key, value);
  } else if (key == "tau-max") {
    const double t = to_double(key, value);
    grids.tau.lo = -t;
    grids.tau.hi = t;
  } else if (key == "lambda-max") {
    const double l = to_double(key, value);
    grids.lambda.lo = -l;
    grids.lambda.hi = l;
  } else if (key == "horocycle-panels") {
    grids.horocycle.panels = to_int(key, value);
  } else if (key == "area-panels") {
    grids.area.panels = to_int(key, value);
  } else if (key == "nbar-truncation") {
    nbar.truncation = to_double(key, value);
  } else if (key == "bumps") {
    bumps = to_int(key, value);
  } else if (key == "out") {
    output = value;
  } else if (key == "format") {
    if (value == "json")
      format = Format::Json;
    else if (value == "csv")
      format = Format::Csv;
    else
      throw ConfigError("format must be json or csv");
  } else if (key.rfind("tol-", 0) == 0) {
    tolerances[key.substr(4)] = to_double(key, value);
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

void RunConfig::validate() const {
  grids.validate();
  nbar.validate();
  if (bumps < 1) throw ConfigError("bumps must be >= 1");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw ConfigError("tolerance " + k + " must be positive");
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

std::string config_path_from_env() {
  const char* p = std::getenv("HORO_CONFIG");
  return p ? std::string(p) : std::string();
}

}  // namespace horo::harness
