#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "optonet/netgen.hpp"
#include "optonet/quantity.hpp"

namespace optonet {

enum class EnergyCategory : std::size_t {
  source_optical,
  detector_reset,
  fluxon,
  memory_update,
  static_leakage,
  soma_overhead,
};

inline constexpr std::size_t energy_category_count = 6;
inline constexpr std::array<EnergyCategory, energy_category_count> all_energy_categories{
    EnergyCategory::source_optical, EnergyCategory::detector_reset, EnergyCategory::fluxon,
    EnergyCategory::memory_update,  EnergyCategory::static_leakage, EnergyCategory::soma_overhead};

std::string_view to_string(EnergyCategory c);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Cumulative energy per category, globally and per neuron. Entries only
/// grow. Categories dissipated at the cold stage are multiplied by the
/// platform's specific power in the wall total.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  EnergyLedger(std::size_t n_neurons, double specific_power);

  /// Throws DomainError for negative or non-finite energy.
  void add(EnergyCategory c, NodeId neuron, Energy e);

  void set_room_temperature(EnergyCategory c, bool room);
  [[nodiscard]] bool is_cold(EnergyCategory c) const;

  [[nodiscard]] Energy total(EnergyCategory c) const;
  [[nodiscard]] std::uint64_t events(EnergyCategory c) const;
  [[nodiscard]] Energy neuron_total(NodeId neuron, EnergyCategory c) const;
  [[nodiscard]] Energy neuron_wall_total(NodeId neuron) const;

  [[nodiscard]] Energy cold_total() const;
  [[nodiscard]] Energy room_total() const;
  /// Σ(cold)·specific_power + Σ(room).
  [[nodiscard]] Energy wall_total() const;

  [[nodiscard]] double specific_power() const { return specific_power_; }
  [[nodiscard]] std::size_t neuron_count() const { return per_neuron_.size(); }

 private:
  using Row = std::array<CompensatedSum, energy_category_count>;
  double specific_power_ = 1.0;
  Row totals_{};
  std::array<std::uint64_t, energy_category_count> counts_{};
  std::array<bool, energy_category_count> room_{};
  std::vector<Row> per_neuron_;
};

}  // namespace optonet
