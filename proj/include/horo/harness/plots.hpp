#pragma once

#include <string>
#include <vector>

#include "horo/harness/config.hpp"
#include "json.hpp"

namespace horo::harness {

// Tabular plot data; notes describe the columns and go into the file header.
struct PlotData {
  std::string what;
  std::vector<std::string> columns;
  std::vector<std::string> notes;
  std::vector<std::vector<double>> rows;
};

const std::vector<std::string>& plot_names();

// what is one of plot_names(): c-function, horocycle-family, radon-profile, spectrum.
PlotData make_plot(const std::string& what, const RunConfig& config);

std::string plot_to_csv(const PlotData& data);
nlohmann::json plot_to_json(const PlotData& data);

// Writes in config.format; throws ConfigError when the file cannot be written.
void write_plot(const PlotData& data, const std::string& path, Format format);

}  // namespace horo::harness
