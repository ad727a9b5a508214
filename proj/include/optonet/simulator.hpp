#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optonet/ledger.hpp"
#include "optonet/linkbudget.hpp"
#include "optonet/memory_cell.hpp"
#include "optonet/netgen.hpp"
#include "optonet/platform.hpp"
#include "optonet/quantity.hpp"

namespace optonet {

/// How a photon pulse becomes a detection.
///  - bernoulli: SNSPD, detect with probability 1 - exp(-N_ph·η_D)
///  - poisson: sample the photon count; SNSPD needs >= 1 detected photon,
///    a photodiode needs >= its required photon count
///  - deterministic: always detect if the mean delivered photons meet the requirement
enum class DetectionMode { bernoulli, poisson, deterministic };

struct SynapseParams {
  OpticalLink link;
  Time tau{1e-6};
  double weight_scale = 1.0;  // soma signal added per detection at full weight
  bool inhibitory = false;
  MemoryCell memory = MemoryCell::analog(1.0);
  std::optional<DetectionMode> detection_mode;  // default: SNSPD bernoulli, photodiode deterministic
  std::optional<double> max_fluxons;            // default: fluxon budget of the link's source energy
  Current i_c{300e-6};                          // junction critical current for fluxon energy
  Energy update_energy{0.0};                    // charged per memory write

  [[nodiscard]] DetectionMode effective_detection_mode() const;
  [[nodiscard]] double effective_max_fluxons() const;
  void validate() const;
};

struct NeuronParams {
  double threshold = 1.0;
  std::optional<Time> refractory;      // default: one SNSPD dead time
  std::optional<Time> transmit_delay;  // default: one SNSPD dead time
  Energy spike_overhead{0.0};          // soma/transmitter electrical energy per spike

  [[nodiscard]] Time effective_refractory() const;
  [[nodiscard]] Time effective_transmit_delay() const;
};

struct PoissonDrive {
  NodeId neuron = 0;
  Frequency rate{0.0};
};

struct SpikeEvent {
  NodeId neuron = 0;
  double time_s = 0.0;

  friend bool operator==(const SpikeEvent&, const SpikeEvent&) = default;
};

using SpikeRecord = std::vector<SpikeEvent>;

struct SimConfig {
  Time duration{1e-3};
  std::uint64_t seed = 0;
  PlatformProfile platform = builtin_profile("superconducting-4K");
  SynapseParams synapse_defaults;
  std::vector<std::optional<SynapseParams>> synapses;  // per edge; empty or nullopt -> defaults
  NeuronParams neuron_defaults;
  std::vector<std::optional<NeuronParams>> neurons;    // per neuron; empty or nullopt -> defaults
  std::vector<PoissonDrive> poisson_drive;
  std::vector<SpikeEvent> scheduled_drive;  // forced spikes
  std::optional<StdpParams> plasticity;
  bool record_spikes = true;
  std::size_t max_pending_events = 50'000'000;
  std::size_t trace_tail = 16;

  [[nodiscard]] const SynapseParams& synapse(std::size_t edge) const;
  [[nodiscard]] const NeuronParams& neuron(std::size_t node) const;
};

struct SynapseStats {
  std::uint32_t edge = 0;
  NodeId src = 0;
  NodeId dst = 0;
  std::uint64_t arrivals = 0;
  std::uint64_t detections = 0;
  std::uint64_t misses = 0;
  std::uint64_t deadtime_blocked = 0;
  std::uint64_t writes = 0;
  std::uint64_t fluxons_emitted = 0;
  double min_detection_interval_s = 0.0;  // +inf until two detections
  double filter_value = 0.0;              // at end of run
  double final_weight = 0.0;              // normalized
  std::int64_t final_level = 0;           // loop cells
  bool degraded = false;
};

struct SynapseReport {
  std::vector<SynapseStats> synapses;
  std::uint64_t arrivals = 0;
  std::uint64_t detections = 0;
  std::uint64_t misses = 0;
  std::uint64_t deadtime_blocked = 0;
  std::uint64_t writes = 0;
  /// Accounting estimate for comparison: Σ over post-synaptic spikes of √fan-in.
  double estimated_updates = 0.0;

  [[nodiscard]] double detected_fraction() const;
};

struct SimResult {
  SpikeRecord spikes;
  EnergyLedger ledger;
  SynapseReport synapses;
  std::vector<std::uint64_t> spike_counts;
  std::uint64_t events_processed = 0;
  Time duration{0.0};
};

/// Seeded event-driven run. Fully deterministic for fixed (graph, config).
/// Throws SimulationError on queue overflow or non-finite state, ConfigError
/// for invalid parameters, EnduranceError under the fault policy.
SimResult run(const NetworkGraph& graph, const SimConfig& config);

/// STDP defaults: τ± = 10 × mean inter-spike interval of the configured Poisson drive.
StdpParams default_stdp_params(const SimConfig& config);

struct PowerReportOptions {
  std::optional<Length> w_sy;
  std::optional<Power> budget;
  /// Wall energy per synapse event for the max-rate cross-check; empirical when unset.
  std::optional<Energy> wall_energy_per_synapse_event;
};

struct PowerReport {
  Time duration{0.0};
  Power cold_power{0.0};
  Power cold_dynamic_power{0.0};
  Power room_power{0.0};
  Power wall_power{0.0};
  std::optional<PowerDensity> synapse_power_density;
  PowerDensity density_limit{0.0};
  std::optional<bool> density_ok;
  std::optional<Power> budget;
  std::optional<double> budget_utilization;
  Frequency mean_rate{0.0};
  std::optional<Frequency> predicted_max_rate;
  std::optional<double> rate_utilization;
};

PowerReport power_report(const SimResult& result, const NetworkGraph& graph,
                         const PlatformProfile& profile, const PowerReportOptions& options = {});

}  // namespace optonet
