#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace horo::harness {

struct CheckRecord {
  std::string name;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<double> residual;  // empty when the check raised
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

struct Diagnostic {
  std::string name;
  double value = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, double> environment;
  std::map<std::string, double> calibration;
  std::vector<CheckRecord> records;
  std::vector<Diagnostic> diagnostics;
  std::string timestamp;

  // pass is residual <= tolerance
  void add(const std::string& name, const std::string& anchor, double lhs, double rhs,
           double residual, double tolerance);
  void add_error(const std::string& name, const std::string& anchor, const std::string& message,
                 double tolerance);
  void diagnose(const std::string& name, double value, const std::string& note);
  void merge(const VerificationReport& other);
  void normalize();  // sort records and diagnostics by name

  bool all_pass() const;
  std::size_t failures() const;
  const CheckRecord* find(const std::string& name) const;
};

constexpr int kSchemaVersion = 1;

// Error messages of records whose quadrature tail check failed start with this.
inline constexpr const char* kTailErrorPrefix = "tail tolerance exceeded: ";
bool has_tail_error(const VerificationReport& report);

// Identity names accepted as record anchors.
const std::vector<std::string>& known_anchors();
bool is_known_anchor(const std::string& anchor);

nlohmann::json to_json(const VerificationReport& report);
std::string to_json_string(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

}  // namespace horo::harness
