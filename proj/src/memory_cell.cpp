#include "optonet/memory_cell.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <random>

#include "optonet/error.hpp"

namespace optonet {

namespace {

// std::nearbyint honours the current rounding mode; pin it to half-to-even.
double round_half_even(double x) {
  const int saved = std::fegetround();
  std::fesetround(FE_TONEAREST);
  const double r = std::nearbyint(x);
  std::fesetround(saved);
  return r;
}

}  // namespace

MemoryCell MemoryCell::loop(int bits, std::int64_t level) {
  MemoryCell c;
  c.kind = MemoryKind::loop;
  c.bits = bits;
  c.level = level;
  c.validate();
  return c;
}

MemoryCell MemoryCell::analog(double value, double write_noise_std, std::uint64_t endurance) {
  MemoryCell c;
  c.kind = MemoryKind::analog;
  c.value = value;
  c.write_noise_std = write_noise_std;
  c.endurance = endurance;
  c.validate();
  return c;
}

double MemoryCell::normalized_weight() const {
  if (kind == MemoryKind::analog) return value;
  return static_cast<double>(level) / static_cast<double>(max_level());
}

void MemoryCell::validate() const {
  if (kind == MemoryKind::loop) {
    if (bits < 1 || bits > 10) throw DomainError("loop memory supports 1 to 10 bits");
    if (level < 0 || level > max_level()) throw DomainError("loop level outside [0, 2^bits)");
  } else {
    if (!(value >= 0.0 && value <= 1.0)) throw DomainError("analog weight outside [0, 1]");
    if (!(write_noise_std >= 0.0)) throw DomainError("write noise must be non-negative");
    if (endurance == 0) throw DomainError("endurance must be positive");
  }
}

void StdpParams::validate() const {
  if (!(a_plus >= 0.0) || !(a_minus >= 0.0)) throw DomainError("STDP amplitudes must be non-negative");
  if (!(tau_plus.value() > 0.0) || !(tau_minus.value() > 0.0)) {
    throw DomainError("STDP time constants must be positive");
  }
  if (!(analog_step > 0.0)) throw DomainError("analog step must be positive");
}

double stdp_delta(Time pre_spike, Time post_spike, const StdpParams& params) {
  const Time dt = post_spike - pre_spike;
  if (dt.value() >= 0.0) return params.a_plus * std::exp(-(dt / params.tau_plus).value());
  return -params.a_minus * std::exp((dt / params.tau_minus).value());
}

MemoryCell apply_stdp(Time pre_spike, Time post_spike, MemoryCell cell, const StdpParams& params,
                      CounterRng* noise) {
  const double delta = stdp_delta(pre_spike, post_spike, params);

  if (cell.kind == MemoryKind::loop) {
    const auto step = static_cast<std::int64_t>(round_half_even(delta));
    const std::int64_t next = std::clamp(cell.level + step, std::int64_t{0}, cell.max_level());
    if (next != cell.level) {
      cell.level = next;
      ++cell.write_count;
    }
    return cell;
  }

  if (cell.degraded || cell.write_count >= cell.endurance) {
    cell.degraded = true;
    if (params.on_exhausted == EndurancePolicy::fault) {
      throw EnduranceError("analog synapse exhausted its endurance of " +
                           std::to_string(cell.endurance) + " writes");
    }
    return cell;
  }
  double target = cell.value + delta * params.analog_step;
  if (cell.write_noise_std > 0.0 && noise != nullptr) {
    std::normal_distribution<double> jitter(0.0, cell.write_noise_std);
    target += jitter(*noise);
  }
  target = std::clamp(target, 0.0, 1.0);
  if (target != cell.value) {
    cell.value = target;
    ++cell.write_count;
    if (cell.write_count >= cell.endurance) cell.degraded = true;
  }
  return cell;
}

std::int64_t weight_to_fluxon_rate(const MemoryCell& cell, double max_fluxons) {
  if (cell.kind != MemoryKind::loop) throw KindError("fluxon rate is defined for loop memory only");
  if (!(max_fluxons >= 0.0)) throw DomainError("max fluxons must be non-negative");
  const double scaled = static_cast<double>(cell.level) * max_fluxons / static_cast<double>(cell.max_level());
  return static_cast<std::int64_t>(round_half_even(scaled));
}

}  // namespace optonet
