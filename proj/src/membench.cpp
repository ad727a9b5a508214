#include "optonet/membench.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "optonet/error.hpp"

namespace optonet {

void SystemAssumptions::validate() const {
  if (!(lifetime.value() > 0.0) || !(mean_rate.value() >= 0.0) || !(e_opt.value() >= 0.0) ||
      !(max_rate.value() > 0.0)) {
    throw DomainError("system assumptions must be positive");
  }
  if (!(fanin >= 1.0)) throw DomainError("fan-in must be at least 1");
  if (mean_rate > max_rate) throw DomainError("mean rate exceeds max rate");
}

double lifetime_updates(const SystemAssumptions& a) {
  if (!(a.fanin >= 1.0)) throw DomainError("fan-in must be at least 1");
  return (a.lifetime * a.mean_rate).value() / std::sqrt(a.fanin);
}

Energy max_update_energy(const SystemAssumptions& a) {
  if (!(a.fanin >= 1.0)) throw DomainError("fan-in must be at least 1");
  return std::sqrt(a.fanin) * a.e_opt;
}

Time max_update_time(const SystemAssumptions& a) {
  if (!(a.max_rate.value() > 0.0)) throw DomainError("max rate must be positive");
  return 1.0 / a.max_rate;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

MetricScore score(std::string metric, std::optional<double> value, double target, bool at_least) {
  MetricScore s;
  s.metric = std::move(metric);
  s.value = value;
  s.target = target;
  s.at_least = at_least;
  if (!value) return s;
  s.margin = target > 0.0 ? *value / target : std::numeric_limits<double>::infinity();
  const bool ok = at_least ? *value >= target : *value <= target;
  s.verdict = ok ? Verdict::pass : Verdict::fail;
  return s;
}

}  // namespace

TechReport score_technology(const MemoryTechSpec& tech, const SystemAssumptions& a) {
  a.validate();
  TechReport r;
  r.name = tech.name;

  r.metrics.push_back(score("endurance", tech.endurance, lifetime_updates(a), true));
  r.metrics.push_back(score("update_energy",
                            tech.update_energy ? std::optional{tech.update_energy->value()} : std::nullopt,
                            max_update_energy(a).value(), false));
  r.metrics.push_back(score("update_time",
                            tech.update_time ? std::optional{tech.update_time->value()} : std::nullopt,
                            max_update_time(a).value(), false));
  auto precision = score("precision_bits", tech.precision_bits, min_precision_bits, true);
  if (precision.value && *precision.value > advisory_precision_bits) {
    precision.note = "above the 8-bit range; more precision than typically required";
  }
  r.metrics.push_back(std::move(precision));

  bool any_fail = false;
  bool any_unknown = false;
  for (auto& m : r.metrics) {
    if (m.verdict == Verdict::fail) any_fail = true;
    if (m.verdict == Verdict::unknown) any_unknown = true;
    if (m.note.empty() && m.verdict != Verdict::unknown) m.note = "boundary values count as passing";
  }
  r.overall = any_fail ? Verdict::fail : (any_unknown ? Verdict::unknown : Verdict::pass);
  return r;
}

std::vector<TargetRow> target_table(const SystemAssumptions& a) {
  a.validate();
  const double updates = lifetime_updates(a);
  const int exponent = static_cast<int>(std::floor(std::log10(updates)));

  const double energy_pj = max_update_energy(a).value() * 1e12;
  const double magnitude = std::pow(10.0, std::floor(std::log10(energy_pj)));
  const double energy_rounded = std::round(energy_pj / magnitude) * magnitude;

  const double time_ns = max_update_time(a).value() * 1e9;

  char energy_buf[32];
  std::snprintf(energy_buf, sizeof energy_buf, "< %g pJ", energy_rounded);
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "< %g ns", time_ns);

  return {
      {"Endurance", "> 10^" + std::to_string(exponent) + " updates"},
      {"Update Energy", energy_buf},
      {"Update Speed", time_buf},
      {"Weight Precision", "4-8 bits"},
  };
}

}  // namespace optonet
