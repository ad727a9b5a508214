#pragma once

#include <cstdint>
#include <limits>

#include "optonet/quantity.hpp"
#include "optonet/rng.hpp"

namespace optonet {

enum class MemoryKind { loop, analog };
enum class EndurancePolicy { freeze, fault };

/// Synaptic weight storage. Loop cells hold an integer fluxon level in
/// [0, 2^bits); analog cells hold a value in [0, 1] with finite endurance.
struct MemoryCell {
  MemoryKind kind = MemoryKind::analog;
  int bits = 10;
  std::int64_t level = 0;
  double value = 1.0;
  double write_noise_std = 0.0;
  std::uint64_t endurance = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t write_count = 0;
  bool degraded = false;

  static MemoryCell loop(int bits, std::int64_t level);
  static MemoryCell analog(double value, double write_noise_std = 0.0,
                           std::uint64_t endurance = std::numeric_limits<std::uint64_t>::max());

  [[nodiscard]] std::int64_t max_level() const { return (std::int64_t{1} << bits) - 1; }
  /// Weight mapped to [0, 1].
  [[nodiscard]] double normalized_weight() const;
  void validate() const;
};

struct StdpParams {
  double a_plus = 4.0;   // loop: levels; analog: multiples of analog_step
  double a_minus = 4.0;
  Time tau_plus{0.0};
  Time tau_minus{0.0};
  double analog_step = 1.0 / 1023.0;
  EndurancePolicy on_exhausted = EndurancePolicy::freeze;

  void validate() const;
};

/// Raw pair-based change for one pre/post pair. Δt = post - pre; Δt >= 0 potentiates.
double stdp_delta(Time pre_spike, Time post_spike, const StdpParams& params);

/// Applies one STDP pair to a cell. Loop cells round to whole levels
/// (half-to-even) and clamp; analog cells add Gaussian write noise from
/// `noise`, clamp to [0, 1], and consume endurance. write_count only moves
/// when the stored state actually changes.
/// Throws EnduranceError on an exhausted cell under EndurancePolicy::fault.
MemoryCell apply_stdp(Time pre_spike, Time post_spike, MemoryCell cell, const StdpParams& params,
                      CounterRng* noise = nullptr);

/// Fluxons a loop cell emits per detection: level scaled linearly onto
/// [0, max_fluxons], rounded half-to-even. Throws KindError for analog cells.
std::int64_t weight_to_fluxon_rate(const MemoryCell& cell, double max_fluxons);

}  // namespace optonet
