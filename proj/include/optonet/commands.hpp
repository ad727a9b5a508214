#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "optonet/dataset.hpp"

namespace optonet {

/// Process exit codes.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int runtime_error = 1;  // also: a validation run fell outside tolerance
inline constexpr int usage_error = 2;
inline constexpr int config_error = 3;
}  // namespace exit_code

/// Flags shared by every verb.
struct GlobalOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> profile;
  std::optional<OutputFormat> format;
  std::vector<std::string> set;  // key=value overrides
};

/// --out, else $OPTONET_OUT_DIR, else ./out.
std::filesystem::path output_dir(const GlobalOptions& opts);

struct Eq6Options {
  std::vector<std::size_t> n{1000};
  std::vector<double> k{20.0};
  std::size_t seeds = 10;
  double tolerance = 0.15;
};

// Each command writes results to `out`, diagnostics to `err`, and returns an
// exit code. Errors propagate as exceptions; wrap calls in run_command.
int cmd_calc(const std::string& formula, const std::vector<std::string>& args, const GlobalOptions& opts,
             std::ostream& out);
int cmd_figure(const std::string& id, const GlobalOptions& opts, std::ostream& out);
int cmd_simulate(const GlobalOptions& opts, std::ostream& out);
int cmd_validate_eq6(const Eq6Options& eq6, const GlobalOptions& opts, std::ostream& out);
int cmd_membench(const GlobalOptions& opts, std::ostream& out);

/// Runs a command, mapping exceptions to exit codes and messages on `err`.
int run_command(const std::function<int()>& command, std::ostream& err);

}  // namespace optonet
