#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "horo/transforms/types.hpp"

namespace horo::harness {

enum class Format { Json, Csv };

struct RunConfig {
  std::uint64_t seed = 20240611;
  tr::TransformGrids grids;
  num::QuadratureSpec nbar;  // normalization integral for c_N
  int bumps = 5;
  std::map<std::string, double> tolerances;  // overrides keyed like "slice"
  std::string output;
  Format format = Format::Json;

  RunConfig();
  double tolerance(const std::string& key, double fallback) const;
  // Apply one flat key = value setting; throws ConfigError for unknown keys.
  void set(const std::string& key, const std::string& value);
  void validate() const;
};

// Lines of `key = value`; '#' starts a comment.
void load_config_file(RunConfig& config, const std::string& path);
// Path from the HORO_CONFIG environment variable, if set.
std::string config_path_from_env();

}  // namespace horo::harness
