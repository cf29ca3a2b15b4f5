#pragma once

#include "rqdyn/io.hpp"
#include "rqdyn/scenarios.hpp"

#include <string>
#include <vector>

namespace rqdyn {

/// One plot-ready output table; the first column is usually time.
struct DataSeries {
  std::string name;  // file stem for CSV emission
  std::vector<std::string> columns;
  Matrix values;
};

struct ScenarioBundle {
  std::string scenario;
  nlohmann::json summary;
  std::vector<DataSeries> series;
};

std::vector<std::string> scenario_names();

/// Embedded default config for a preset:
/// {"scenario": ..., "parameters": {...}, "time": {"t_end", "samples"},
///  "outputs": [...]}. Throws ConfigError for unknown names.
nlohmann::json default_scenario_config(const std::string& name);

/// Runs a preset from a config document (defaults merged with the caller's
/// overrides by the CLI layer).
ScenarioBundle run_scenario(const nlohmann::json& config);

}  // namespace rqdyn
