#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "optonet/membench.hpp"
#include "optonet/netgen.hpp"
#include "optonet/simulator.hpp"

namespace optonet {

/// A fully parsed simulation scenario.
struct Scenario {
  std::string name;
  NetworkGraph graph;
  SimConfig config;
  PowerReportOptions report;
  nlohmann::json effective;  // config after command-line overrides
};

/// Command-line adjustments applied before parsing.
struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> profile;
  std::vector<std::string> assignments;  // "a.b.c=value", value parsed as JSON when possible
};

/// Applies one "a.b.c=value" assignment. Throws UsageError on a malformed item.
void apply_assignment(nlohmann::json& config, const std::string& assignment);

/// Parses a scenario document. Collects every problem and throws a single
/// ConfigError listing them. `base_dir` resolves relative edge-list paths.
Scenario parse_scenario(nlohmann::json config, const ScenarioOverrides& overrides = {},
                        const std::filesystem::path& base_dir = {});

/// Reads and parses a scenario file. Throws ConfigError for unreadable or
/// malformed JSON as well as for invalid content.
Scenario load_scenario(const std::filesystem::path& path, const ScenarioOverrides& overrides = {});

/// Reads a memory-technology file: {"assumptions": {...}, "technologies": [...]}.
/// Missing or null fields become unknown. Throws ConfigError.
struct MembenchConfig {
  SystemAssumptions assumptions;
  std::vector<MemoryTechSpec> technologies;
};
MembenchConfig parse_membench(const nlohmann::json& config);
MembenchConfig load_membench(const std::filesystem::path& path);

/// Directory holding the bundled scenarios/ and data/ folders.
std::filesystem::path bundled_data_dir();

}  // namespace optonet
