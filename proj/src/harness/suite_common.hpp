#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "horo/errors.hpp"
#include "horo/harness/config.hpp"
#include "horo/harness/report.hpp"
#include "horo/transforms/measures.hpp"

namespace horo::harness::detail {

// Runs body; library errors become failed records instead of propagating.
inline void guarded(VerificationReport& report, const std::string& name, const std::string& anchor,
                    double tolerance, const std::function<void()>& body) {
  try {
    body();
  } catch (const horo::TailToleranceExceeded& e) {
    report.add_error(name, anchor, std::string(kTailErrorPrefix) + e.what(), tolerance);
  } catch (const horo::Error& e) {
    report.add_error(name, anchor, e.what(), tolerance);
  }
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline std::mt19937_64 suite_rng(const RunConfig& config, std::uint64_t salt) {
  return std::mt19937_64(config.seed ^ (0x9E3779B97F4A7C15ULL * salt));
}

VerificationReport structure_suite(const RunConfig& config);
VerificationReport geometry_suite(const RunConfig& config);
VerificationReport slice_suite(const RunConfig& config, const tr::Calibration& cal);
VerificationReport plancherel_suite(const RunConfig& config, const tr::Calibration& cal);
VerificationReport unitarity_suite(const RunConfig& config, const tr::Calibration& cal);
VerificationReport intertwine_suite(const RunConfig& config, const tr::Calibration& cal);
VerificationReport properties_suite(const RunConfig& config, const tr::Calibration& cal);
VerificationReport spd_suite(const RunConfig& config);

}  // namespace horo::harness::detail
