#include "horo/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace horo::harness {

void VerificationReport::add(const std::string& name, const std::string& anchor, double lhs,
                             double rhs, double residual, double tolerance) {
  CheckRecord r;
  r.name = name;
  r.anchor = anchor;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  if (std::isfinite(residual)) {
    r.residual = residual;
    r.pass = residual <= tolerance;
  } else {
    r.error = "non-finite residual";
  }
  records.push_back(std::move(r));
}

void VerificationReport::add_error(const std::string& name, const std::string& anchor,
                                   const std::string& message, double tolerance) {
  CheckRecord r;
  r.name = name;
  r.anchor = anchor;
  r.tolerance = tolerance;
  r.error = message;
  records.push_back(std::move(r));
}

void VerificationReport::diagnose(const std::string& name, double value, const std::string& note) {
  diagnostics.push_back({name, value, note});
}

void VerificationReport::merge(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
  for (const auto& [k, v] : other.environment) environment[k] = v;
  for (const auto& [k, v] : other.calibration) calibration[k] = v;
}

void VerificationReport::normalize() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.name < b.name; });
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

bool has_tail_error(const VerificationReport& report) {
  return std::any_of(report.records.begin(), report.records.end(), [](const CheckRecord& r) {
    return r.error.rfind(kTailErrorPrefix, 0) == 0;
  });
}

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors = {
      "a-normalization",        "abel-integrability",   "ad-root-spaces",
      "borel-section",          "boundary-action",      "boundary-density",
      "c-function",             "cayley-transform",     "cocycle",
      "composite-distance",     "congruence-action",    "dual-relation",
      "fourier-a-intertwining", "fourier-a-plancherel", "fourier-slice",
      "g-invariance",           "geodesic-symmetry",    "helgason-equivariance",
      "horocycle-action",
      "horocycle-circle",       "horocycle-membership", "horocycle-rereference",
      "iwasawa-kan",            "iwasawa-nak",          "iwasawa-inverse",
      "k-orbit",                "kappa-maps",           "killing-form",
      "lambda-intertwining",    "lambda-multiplier",    "linearity",
      "mobius-action",          "modular-function",     "n-normalization",
      "n-orbit",                "phi-isometry",         "plancherel",
      "plancherel-kappa",       "property-flat",        "property-sharp",
      "q-intertwining",         "quasi-invariance",     "radon-intertwining",
      "radon-reference",        "restricted-roots",     "rho",
      "spd-horocycle",          "trace-metric",         "udu",
      "unitarization",          "weyl-chambers",
  };
  return anchors;
}

bool is_known_anchor(const std::string& anchor) {
  const auto& a = known_anchors();
  return std::find(a.begin(), a.end(), anchor) != a.end();
}

nlohmann::json to_json(const VerificationReport& report) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["timestamp"] = report.timestamp;
  j["environment"] = json(report.environment);
  j["calibration"] = json(report.calibration);
  json recs = json::array();
  for (const auto& r : report.records) {
    json e;
    e["name"] = r.name;
    e["anchor"] = r.anchor;
    e["lhs"] = r.lhs;
    e["rhs"] = r.rhs;
    e["residual"] = r.residual ? json(*r.residual) : json(nullptr);
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    if (!r.error.empty()) e["error"] = r.error;
    recs.push_back(std::move(e));
  }
  j["records"] = std::move(recs);
  json diags = json::array();
  for (const auto& d : report.diagnostics)
    diags.push_back({{"name", d.name}, {"value", d.value}, {"note", d.note}});
  j["diagnostics"] = std::move(diags);
  j["summary"] = {{"checks", report.records.size()},
                  {"failures", report.failures()},
                  {"pass", report.all_pass()}};
  return j;
}

std::string to_json_string(const VerificationReport& report) {
  return to_json(report).dump(2) + "\n";
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << " suite=" << report.suite
     << " seed=" << report.seed << " timestamp=" << report.timestamp << "\n";
  for (const auto& [k, v] : report.calibration) os << "# calibration " << k << "=" << num(v) << "\n";
  for (const auto& [k, v] : report.environment) os << "# environment " << k << "=" << num(v) << "\n";
  os << "name,anchor,lhs,rhs,residual,tolerance,pass,error\n";
  for (const auto& r : report.records) {
    os << quoted(r.name) << ',' << quoted(r.anchor) << ',' << num(r.lhs) << ',' << num(r.rhs) << ','
       << (r.residual ? num(*r.residual) : std::string()) << ',' << num(r.tolerance) << ','
       << (r.pass ? "true" : "false") << ',' << quoted(r.error) << "\n";
  }
  return os.str();
}

}  // namespace horo::harness
