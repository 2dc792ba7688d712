#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poollines/scenario.h"
#include "poollines/simulation.h"

namespace poollines {

// Everything one batch run needs. Loaded from a JSON document; relative paths
// are resolved against the document's directory.
struct run_config {
  std::filesystem::path gtfs_path;
  std::optional<std::int32_t> service_date;  // YYYYMMDD
  std::optional<std::filesystem::path> agents_path;
  std::filesystem::path output_dir{"out"};
  scenario_config scenario;
  simulation_config simulation;
};

// Throws config_error on unknown keys, wrong types or invalid values.
run_config parse_run_config(std::string_view json_text,
                            std::filesystem::path const& base_dir = {});
run_config load_run_config(std::filesystem::path const& file);

// Applies "dotted.key=value" overrides (value parsed as JSON when possible,
// otherwise taken as a string) on top of a JSON document.
std::string apply_overrides(std::string_view json_text,
                            std::vector<std::string> const& overrides);

// Canonical JSON of the effective configuration.
std::string to_json(run_config const& c);

void validate(run_config const& c);

}  // namespace poollines
