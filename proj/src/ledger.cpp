#include "optonet/ledger.hpp"

#include <cmath>

#include "optonet/error.hpp"

namespace optonet {

std::string_view to_string(EnergyCategory c) {
  switch (c) {
    case EnergyCategory::source_optical: return "source_optical";
    case EnergyCategory::detector_reset: return "detector_reset";
    case EnergyCategory::fluxon: return "fluxon";
    case EnergyCategory::memory_update: return "memory_update";
    case EnergyCategory::static_leakage: return "static_leakage";
    case EnergyCategory::soma_overhead: return "soma_overhead";
  }
  return "unknown";
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

EnergyLedger::EnergyLedger(std::size_t n_neurons, double specific_power)
    : specific_power_(specific_power), per_neuron_(n_neurons) {
  if (!(specific_power >= 1.0)) throw DomainError("specific power must be at least 1");
}

void EnergyLedger::add(EnergyCategory c, NodeId neuron, Energy e) {
  if (!(e.value() >= 0.0) || !std::isfinite(e.value())) {
    throw DomainError("ledger entries must be finite and non-negative");
  }
  const auto i = static_cast<std::size_t>(c);
  totals_[i].add(e.value());
  ++counts_[i];
  if (neuron < per_neuron_.size()) per_neuron_[neuron][i].add(e.value());
}

void EnergyLedger::set_room_temperature(EnergyCategory c, bool room) {
  room_[static_cast<std::size_t>(c)] = room;
}

bool EnergyLedger::is_cold(EnergyCategory c) const { return !room_[static_cast<std::size_t>(c)]; }

Energy EnergyLedger::total(EnergyCategory c) const {
  return Energy{totals_[static_cast<std::size_t>(c)].value()};
}

std::uint64_t EnergyLedger::events(EnergyCategory c) const { return counts_[static_cast<std::size_t>(c)]; }

Energy EnergyLedger::neuron_total(NodeId neuron, EnergyCategory c) const {
  if (neuron >= per_neuron_.size()) throw DomainError("neuron index outside ledger");
  return Energy{per_neuron_[neuron][static_cast<std::size_t>(c)].value()};
}

Energy EnergyLedger::neuron_wall_total(NodeId neuron) const {
  Energy cold{0.0};
  Energy room{0.0};
  for (auto c : all_energy_categories) {
    (is_cold(c) ? cold : room) += neuron_total(neuron, c);
  }
  return cold * specific_power_ + room;
}

Energy EnergyLedger::cold_total() const {
  Energy sum{0.0};
  for (auto c : all_energy_categories) {
    if (is_cold(c)) sum += total(c);
  }
  return sum;
}

Energy EnergyLedger::room_total() const {
  Energy sum{0.0};
  for (auto c : all_energy_categories) {
    if (!is_cold(c)) sum += total(c);
  }
  return sum;
}

Energy EnergyLedger::wall_total() const { return cold_total() * specific_power_ + room_total(); }

}  // namespace optonet
