#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optonet/quantity.hpp"

namespace optonet {

/// Synaptic memory technology. Unknown figures are left empty and score as "unknown".
struct MemoryTechSpec {
  std::string name;
  std::optional<double> endurance;  // lifetime writes
  std::optional<Energy> update_energy;
  std::optional<Time> update_time;
  std::optional<double> precision_bits;
  std::optional<bool> volatile_on_warmup;
  std::optional<Voltage> programming_voltage;  // informational
};

struct SystemAssumptions {
  Time lifetime{1e9};
  Frequency mean_rate{10e3};
  double fanin = 1000.0;
  Energy e_opt{100e-15};
  Frequency max_rate{10e6};

  void validate() const;
};

/// Weight updates a synapse sees over its lifetime, L·f/√N.
double lifetime_updates(const SystemAssumptions& a);

/// Largest update energy that keeps plasticity below communication power, √N·E_opt.
Energy max_update_energy(const SystemAssumptions& a);

/// Longest update that fits in the minimum inter-spike interval, 1/max_rate.
Time max_update_time(const SystemAssumptions& a);

inline constexpr double min_precision_bits = 4.0;
inline constexpr double advisory_precision_bits = 8.0;

enum class Verdict { pass, fail, unknown };
std::string to_string(Verdict v);

struct MetricScore {
  std::string metric;
  Verdict verdict = Verdict::unknown;
  std::optional<double> value;   // SI
  double target = 0.0;           // SI
  bool at_least = true;          // target is a floor (true) or a ceiling (false)
  std::optional<double> margin;  // value/target; pass <=> margin >= 1 (floor) or <= 1 (ceiling)
  std::string note;
};

struct TechReport {
  std::string name;
  std::vector<MetricScore> metrics;
  Verdict overall = Verdict::unknown;  // fail if any fail, else unknown if any unknown, else pass
};

/// Scores a technology against targets derived from the assumptions. Boundary values pass.
TechReport score_technology(const MemoryTechSpec& tech, const SystemAssumptions& a);

struct TargetRow {
  std::string metric;
  std::string goal;
};

/// Human-readable target table, rounded the way a summary table would state it
/// (endurance down to a power of ten, energy to one significant figure).
std::vector<TargetRow> target_table(const SystemAssumptions& a);

}  // namespace optonet
