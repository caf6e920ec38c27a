#pragma once

#include <string>
#include <vector>

#include "horo/harness/config.hpp"
#include "horo/harness/report.hpp"
#include "horo/transforms/measures.hpp"

namespace horo::harness {

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Measure calibration for the grids in config (kappa from the reference bump).
tr::Calibration calibration_for(const RunConfig& config, bool with_refinement = false);

VerificationReport run_calibrate(const RunConfig& config);
// name is one of suite_names() or "all".
VerificationReport run_suite(const std::string& name, const RunConfig& config);
VerificationReport run_suite(const std::string& name, const RunConfig& config,
                             const tr::Calibration& calibration);

}  // namespace horo::harness
