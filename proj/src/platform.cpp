#include "optonet/platform.hpp"

#include <cmath>

#include "optonet/constants.hpp"
#include "optonet/error.hpp"

namespace optonet {

void PlatformProfile::validate() const {
  if (!(t_cold.value() > 0.0)) throw DomainError("cold temperature must be positive");
  if (!(t_hot >= t_cold)) throw DomainError("hot temperature must not be below cold temperature");
  if (!(specific_power >= 1.0)) throw DomainError("specific power must be at least 1 W/W");
  const double floor = carnot_specific_power(t_hot, t_cold);
  if (specific_power < floor) {
    throw DomainError("specific power " + std::to_string(specific_power) +
                      " W/W is below the Carnot limit " + std::to_string(floor) + " W/W");
  }
  if (!(power_density_limit.value() > 0.0)) throw DomainError("power density limit must be positive");
  if (!(wavelength.value() > 0.0)) throw DomainError("wavelength must be positive");
  if (!(default_eta.value() > 0.0)) throw DomainError("default link efficiency must be positive");
}

std::optional<PlatformProfile> find_builtin_profile(std::string_view name) {
  if (name == "superconducting-4K") {
    PlatformProfile p;
    p.name = "superconducting-4K";
    p.kind = PlatformKind::superconducting;
    p.specific_power = 1000.0;
    p.t_hot = Temperature{300.0};
    p.t_cold = Temperature{4.2};
    p.power_density_limit = PowerDensity{1e4};  // 1 W/cm²
    return p;
  }
  if (name == "semiconductor-300K") {
    PlatformProfile p;
    p.name = "semiconductor-300K";
    p.kind = PlatformKind::semiconductor;
    p.specific_power = 1.0;
    p.t_hot = Temperature{300.0};
    p.t_cold = Temperature{300.0};
    p.power_density_limit = PowerDensity{1e7};  // 1 kW/cm²
    return p;
  }
  return std::nullopt;
}

PlatformProfile builtin_profile(std::string_view name) {
  auto p = find_builtin_profile(name);
  if (!p) throw DomainError("unknown platform profile '" + std::string(name) + "'");
  return *p;
}

std::vector<std::string> builtin_profile_names() { return {"superconducting-4K", "semiconductor-300K"}; }

double carnot_specific_power(Temperature t_hot, Temperature t_cold) {
  if (!(t_cold.value() > 0.0) || t_hot < t_cold) {
    throw DomainError("Carnot limit requires t_hot >= t_cold > 0");
  }
  return ((t_hot - t_cold) / t_cold).value();
}

Power wall_power(Power cold_power, const PlatformProfile& profile) {
  return cold_power * profile.specific_power;
}

Energy wall_energy(Energy cold_energy, const PlatformProfile& profile) {
  return cold_energy * profile.specific_power;
}

Frequency max_average_spike_rate(Power power_budget, double n_neurons, double fanout,
                                 Energy e_per_synapse_event) {
  if (!(power_budget.value() > 0.0) || !(n_neurons > 0.0) || !(fanout > 0.0) ||
      !(e_per_synapse_event.value() > 0.0)) {
    throw DomainError("max_average_spike_rate requires strictly positive inputs");
  }
  return power_budget / (n_neurons * fanout * e_per_synapse_event);
}

Frequency power_density_spike_limit(Length w_sy, Energy e_on_chip_per_event,
                                    PowerDensity density_limit) {
  if (!(w_sy.value() > 0.0) || !(e_on_chip_per_event.value() > 0.0) ||
      !(density_limit.value() > 0.0)) {
    throw DomainError("power_density_spike_limit requires strictly positive inputs");
  }
  return density_limit * w_sy * w_sy / e_on_chip_per_event;
}

SquidSpec squid_from_critical_current(Current i_c) {
  if (!(i_c.value() > 0.0)) throw DomainError("critical current must be positive");
  const auto phi0 = constants::flux_quantum;
  SquidSpec s;
  s.i_c = i_c;
  s.e_sq = 2.0 * i_c * phi0;
  s.l_sq = phi0 / (2.0 * i_c);
  s.w_sq = s.l_sq / (1.25 * constants::vacuum_permeability);
  return s;
}

double fluxon_budget(Energy e_budget, Current i_c) {
  if (!(i_c.value() > 0.0)) throw DomainError("critical current must be positive");
  if (e_budget.value() < 0.0) throw DomainError("energy budget must be non-negative");
  return (e_budget / (i_c * constants::flux_quantum)).value();
}

void TimeConstantSpec::validate() const {
  if (!(c_density.value() > 0.0) || !(v_th.value() > 0.0) || !(i_tau.value() > 0.0) ||
      !(l_square.value() > 0.0) || !(r_s.value() > 0.0) || !(w_wire.value() > 0.0) ||
      !(w_gap.value() > 0.0)) {
    throw DomainError("time-constant parameters must be strictly positive");
  }
  if (!(kappa > 0.0 && kappa <= 2.0)) throw DomainError("kappa must lie in (0, 2]");
}

Time dpi_time_constant(Capacitance c_si, Voltage v_th, double kappa, Current i_tau) {
  if (!(c_si.value() > 0.0) || !(v_th.value() > 0.0) || !(kappa > 0.0) || !(i_tau.value() > 0.0)) {
    throw DomainError("DPI time constant requires strictly positive inputs");
  }
  return c_si * v_th / (kappa * i_tau);
}

Time cmos_max_time_constant(Length w_sy, const TimeConstantSpec& spec) {
  spec.validate();
  if (!(w_sy.value() > 0.0)) throw DomainError("synapse width must be positive");
  return dpi_time_constant(spec.c_density * w_sy * w_sy, spec.v_th, spec.kappa, spec.i_tau);
}

ScTimeConstant sc_max_time_constant(Length w_sy, const TimeConstantSpec& spec) {
  spec.validate();
  if (!(w_sy.value() > 0.0)) throw DomainError("synapse width must be positive");
  const Length pitch = spec.w_wire + spec.w_gap;
  const Area footprint = w_sy * w_sy;
  ScTimeConstant out;
  out.l_si = (footprint / (spec.w_wire * pitch)).value() * spec.l_square;
  out.r_si = (spec.w_gap * pitch / footprint).value() * spec.r_s;
  out.tau_max = out.l_si / out.r_si;
  return out;
}

}  // namespace optonet
