#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optonet/quantity.hpp"

namespace optonet {

enum class PlatformKind { superconducting, semiconductor };

/// Platform-wide constants shared by every analysis.
struct PlatformProfile {
  std::string name;
  PlatformKind kind = PlatformKind::superconducting;
  double specific_power = 1000.0;  // W of refrigeration per W removed at the cold stage
  Temperature t_hot{300.0};
  Temperature t_cold{4.2};
  PowerDensity power_density_limit{1e4};
  Length wavelength{1.5e-6};
  Probability default_eta{0.01};

  /// Checks ranges and that specific_power is not below the Carnot floor.
  void validate() const;
};

/// "superconducting-4K": 1000 W/W at 4.2 K, 1 W/cm². "semiconductor-300K": no cooling, 1 kW/cm².
PlatformProfile builtin_profile(std::string_view name);
std::optional<PlatformProfile> find_builtin_profile(std::string_view name);
std::vector<std::string> builtin_profile_names();

double carnot_specific_power(Temperature t_hot, Temperature t_cold);

Power wall_power(Power cold_power, const PlatformProfile& profile);
Energy wall_energy(Energy cold_energy, const PlatformProfile& profile);

/// Largest mean spike rate a population can sustain within a power budget,
/// budget/(neurons·fanout·energy per synapse event).
Frequency max_average_spike_rate(Power power_budget, double n_neurons, double fanout,
                                 Energy e_per_synapse_event);

/// Spike rate at which a synapse of width w_sy reaches the areal power limit.
/// Uses on-chip (cold, not cooling-inflated) energy per event.
Frequency power_density_spike_limit(Length w_sy, Energy e_on_chip_per_event,
                                    PowerDensity density_limit);

struct SquidSpec {
  Current i_c;
  Length w_sq;
  Energy e_sq;  // energy to produce two fluxons
  Inductance l_sq;
};

/// Sizes a washer SQUID from its junction critical current using 2·L·I_c = Φ₀ and L ≈ 1.25·µ₀·w.
SquidSpec squid_from_critical_current(Current i_c);

/// Fluxons producible from an energy budget at I_c·Φ₀ per fluxon.
double fluxon_budget(Energy e_budget, Current i_c);

struct TimeConstantSpec {
  ArealCapacitance c_density{20e-15 / 1e-12};  // 20 fF/µm²
  Voltage v_th{25e-3};
  double kappa = 1.0;
  Current i_tau{10e-15};
  InductancePerSquare l_square{160e-12};
  SheetResistance r_s{1e-3};
  Length w_wire{100e-9};
  Length w_gap{100e-9};

  void validate() const;
};

/// Differential-pair integrator time constant, C·V_th/(κ·I_τ).
Time dpi_time_constant(Capacitance c_si, Voltage v_th, double kappa, Current i_tau);

/// Largest DPI time constant when the full w_sy² footprint is capacitor.
Time cmos_max_time_constant(Length w_sy, const TimeConstantSpec& spec);

struct ScTimeConstant {
  Inductance l_si;  // meander inductor filling w_sy²
  Resistance r_si;  // smallest parallel resistor in w_sy²
  Time tau_max;
};

/// Largest L/r time constant a superconducting synapse of width w_sy can realize.
ScTimeConstant sc_max_time_constant(Length w_sy, const TimeConstantSpec& spec);

}  // namespace optonet
