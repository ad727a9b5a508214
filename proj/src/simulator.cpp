#include "optonet/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <string>

#include "optonet/constants.hpp"
#include "optonet/error.hpp"
#include "optonet/photonics.hpp"
#include "optonet/rng.hpp"

namespace optonet {

namespace {

constexpr double never = -std::numeric_limits<double>::infinity();

Time snspd_default_dead_time() { return SnspdReceiver{}.dead_time(); }

bool is_snspd(const OpticalLink& link) { return std::holds_alternative<SnspdReceiver>(link.receiver); }

}  // namespace

DetectionMode SynapseParams::effective_detection_mode() const {
  if (detection_mode) return *detection_mode;
  return is_snspd(link) ? DetectionMode::bernoulli : DetectionMode::deterministic;
}

double SynapseParams::effective_max_fluxons() const {
  if (max_fluxons) return *max_fluxons;
  return std::floor(fluxon_budget(link.source_energy(), i_c));
}

void SynapseParams::validate() const {
  link.validate();
  memory.validate();
  if (!(tau.value() > 0.0)) throw DomainError("synapse time constant must be positive");
  if (!std::isfinite(weight_scale) || weight_scale < 0.0) {
    throw DomainError("weight scale must be finite and non-negative (use inhibitory for sign)");
  }
  if (!(i_c.value() > 0.0)) throw DomainError("critical current must be positive");
  if (!(update_energy.value() >= 0.0)) throw DomainError("update energy must be non-negative");
  if (max_fluxons && !(*max_fluxons >= 0.0)) throw DomainError("max fluxons must be non-negative");
  if (!is_snspd(link) && effective_detection_mode() == DetectionMode::bernoulli) {
    throw DomainError("bernoulli detection applies to SNSPD receivers only");
  }
}

Time NeuronParams::effective_refractory() const { return refractory.value_or(snspd_default_dead_time()); }

Time NeuronParams::effective_transmit_delay() const {
  return transmit_delay.value_or(snspd_default_dead_time());
}

const SynapseParams& SimConfig::synapse(std::size_t edge) const {
  if (edge < synapses.size() && synapses[edge]) return *synapses[edge];
  return synapse_defaults;
}

const NeuronParams& SimConfig::neuron(std::size_t node) const {
  if (node < neurons.size() && neurons[node]) return *neurons[node];
  return neuron_defaults;
}

double SynapseReport::detected_fraction() const {
  const auto trials = detections + misses;
  return trials == 0 ? 0.0 : static_cast<double>(detections) / static_cast<double>(trials);
}

StdpParams default_stdp_params(const SimConfig& config) {
  double rate_sum = 0.0;
  for (const auto& d : config.poisson_drive) rate_sum += d.rate.value();
  if (config.poisson_drive.empty() || !(rate_sum > 0.0)) {
    throw ConfigError({"plasticity time constants must be given explicitly when no Poisson drive sets a mean rate"});
  }
  const double mean_rate = rate_sum / static_cast<double>(config.poisson_drive.size());
  StdpParams p;
  p.tau_plus = Time{10.0 / mean_rate};
  p.tau_minus = p.tau_plus;
  return p;
}

namespace {

enum class EventKind : std::uint8_t { drive_scheduled, drive_poisson, arrival, soma_check };

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::drive_scheduled: return "drive";
    case EventKind::drive_poisson: return "poisson-drive";
    case EventKind::arrival: return "arrival";
    case EventKind::soma_check: return "soma-check";
  }
  return "?";
}

struct Event {
  double t;
  std::uint64_t seq;
  EventKind kind;
  std::uint32_t target;
  std::uint64_t aux;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    return a.t != b.t ? a.t > b.t : a.seq > b.seq;
  }
};

struct Component {
  double tau;
  double amp;
};

struct NeuronRt {
  double threshold = 1.0;
  double refractory = 0.0;
  double delay = 0.0;
  double overhead = 0.0;
  std::vector<Component> components;
  bool has_inhibitory = false;
  double t_ref = 0.0;
  std::uint64_t reset_epoch = 0;
  std::uint64_t version = 0;
  double refractory_until = never;
  double last_spike = never;
};

struct SynapseRt {
  const SynapseParams* params = nullptr;
  DetectionMode mode = DetectionMode::bernoulli;
  bool snspd = true;
  double detect_mean = 0.0;       // photons entering the detection rule
  double p_detect = 0.0;          // bernoulli
  double required_photons = 0.0;  // photodiode threshold
  double dead_time = 0.0;
  double source_energy = 0.0;
  double reset_energy = 0.0;
  double fluxon_unit = 0.0;
  double max_fluxons = 0.0;
  double sign = 1.0;
  double tau = 1.0;
  std::size_t component = 0;
  MemoryCell cell;
  double filter = 0.0;
  double filter_t = 0.0;
  std::uint64_t filter_epoch = 0;
  double dead_until = never;
  double last_detection = never;
  CounterRng detect_rng;
  CounterRng noise_rng;
  SynapseStats stats;
};

class Engine {
 public:
  Engine(const NetworkGraph& graph, const SimConfig& config) : g_(graph), cfg_(config) {}

  SimResult run() {
    validate();
    build();
    seed_drive();
    while (!queue_.empty()) {
      const Event ev = queue_.top();
      if (ev.t > cfg_.duration.value()) break;
      queue_.pop();
      remember(ev);
      dispatch(ev);
      ++result_.events_processed;
    }
    finish();
    return std::move(result_);
  }

 private:
  void validate() {
    std::vector<std::string> problems;
    const std::size_t n = g_.node_count();
    if (n == 0) problems.emplace_back("graph has no neurons");
    if (!(cfg_.duration.value() > 0.0) || !std::isfinite(cfg_.duration.value())) {
      problems.emplace_back("duration must be positive and finite");
    }
    if (!cfg_.synapses.empty() && cfg_.synapses.size() != g_.edge_count()) {
      problems.emplace_back("per-synapse parameter list has " + std::to_string(cfg_.synapses.size()) +
                            " entries for " + std::to_string(g_.edge_count()) + " edges");
    }
    if (!cfg_.neurons.empty() && cfg_.neurons.size() != n) {
      problems.emplace_back("per-neuron parameter list has " + std::to_string(cfg_.neurons.size()) +
                            " entries for " + std::to_string(n) + " neurons");
    }
    try {
      cfg_.platform.validate();
    } catch (const std::exception& e) {
      problems.emplace_back(std::string("platform: ") + e.what());
    }
    auto check_synapse = [&](const SynapseParams& s, const std::string& where) {
      try {
        s.validate();
      } catch (const std::exception& e) {
        problems.emplace_back(where + ": " + e.what());
      }
    };
    check_synapse(cfg_.synapse_defaults, "synapse defaults");
    for (std::size_t i = 0; i < cfg_.synapses.size(); ++i) {
      if (cfg_.synapses[i]) check_synapse(*cfg_.synapses[i], "synapse " + std::to_string(i));
    }
    auto check_neuron = [&](const NeuronParams& p, const std::string& where) {
      if (!std::isfinite(p.threshold) || !(p.threshold > 0.0)) problems.emplace_back(where + ": threshold must be positive");
      if (!(p.effective_refractory().value() >= 0.0)) problems.emplace_back(where + ": refractory must be non-negative");
      if (!(p.effective_transmit_delay().value() >= 0.0)) problems.emplace_back(where + ": transmit delay must be non-negative");
      if (!(p.spike_overhead.value() >= 0.0)) problems.emplace_back(where + ": spike overhead must be non-negative");
    };
    check_neuron(cfg_.neuron_defaults, "neuron defaults");
    for (std::size_t i = 0; i < cfg_.neurons.size(); ++i) {
      if (cfg_.neurons[i]) check_neuron(*cfg_.neurons[i], "neuron " + std::to_string(i));
    }
    for (const auto& d : cfg_.poisson_drive) {
      if (d.neuron >= n) problems.emplace_back("Poisson drive targets missing neuron " + std::to_string(d.neuron));
      if (!(d.rate.value() >= 0.0) || !std::isfinite(d.rate.value())) problems.emplace_back("drive rates must be non-negative");
    }
    for (const auto& s : cfg_.scheduled_drive) {
      if (s.neuron >= n) problems.emplace_back("scheduled drive targets missing neuron " + std::to_string(s.neuron));
      if (!(s.time_s >= 0.0) || !std::isfinite(s.time_s)) problems.emplace_back("scheduled drive times must be finite and non-negative");
    }
    if (cfg_.plasticity) {
      StdpParams p = *cfg_.plasticity;
      if (p.tau_plus.value() == 0.0 || p.tau_minus.value() == 0.0) {
        try {
          const auto d = default_stdp_params(cfg_);
          if (p.tau_plus.value() == 0.0) p.tau_plus = d.tau_plus;
          if (p.tau_minus.value() == 0.0) p.tau_minus = d.tau_minus;
        } catch (const ConfigError& e) {
          problems.insert(problems.end(), e.problems().begin(), e.problems().end());
        }
      }
      try {
        if (p.tau_plus.value() > 0.0 && p.tau_minus.value() > 0.0) p.validate();
      } catch (const std::exception& e) {
        problems.emplace_back(std::string("plasticity: ") + e.what());
      }
      stdp_ = p;
    }
    if (cfg_.max_pending_events == 0) problems.emplace_back("max_pending_events must be positive");
    if (!problems.empty()) throw ConfigError(std::move(problems));
  }

  void build() {
    const std::size_t n = g_.node_count();
    result_.ledger = EnergyLedger(n, cfg_.platform.specific_power);
    result_.spike_counts.assign(n, 0);
    result_.duration = cfg_.duration;

    neurons_.resize(n);
    for (NodeId i = 0; i < n; ++i) {
      const auto& p = cfg_.neuron(i);
      auto& rt = neurons_[i];
      rt.threshold = p.threshold;
      rt.refractory = p.effective_refractory().value();
      rt.delay = p.effective_transmit_delay().value();
      rt.overhead = p.spike_overhead.value();
    }

    synapses_.resize(g_.edge_count());
    for (std::uint32_t e = 0; e < g_.edge_count(); ++e) {
      const auto& p = cfg_.synapse(e);
      auto& s = synapses_[e];
      s.params = &p;
      s.mode = p.effective_detection_mode();
      s.snspd = is_snspd(p.link);
      s.source_energy = p.link.source_energy().value();
      s.sign = p.inhibitory ? -1.0 : 1.0;
      s.tau = p.tau.value();
      s.cell = p.memory;
      s.detect_rng = CounterRng(cfg_.seed, StreamTag::detection, e);
      s.noise_rng = CounterRng(cfg_.seed, StreamTag::write_noise, e);
      if (s.snspd) {
        const auto& rx = std::get<SnspdReceiver>(p.link.receiver);
        s.detect_mean = p.link.n_ph * rx.eta_d.value();
        s.p_detect = -std::expm1(-s.detect_mean);
        s.dead_time = rx.dead_time().value();
        s.reset_energy = snspd_reset_energy(rx.l_spd, rx.i_spd).value();
      } else {
        const auto& pd = std::get<ReceiverlessPhotodiode>(p.link.receiver);
        s.detect_mean = p.link.n_ph;
        s.required_photons = receiverless_photon_count(pd, p.link.wavelength);
      }
      if (s.cell.kind == MemoryKind::loop) {
        s.fluxon_unit = (p.i_c * constants::flux_quantum).value();
        s.max_fluxons = p.effective_max_fluxons();
      }
      s.stats.edge = e;
      s.stats.src = g_.edges()[e].src;
      s.stats.dst = g_.edges()[e].dst;
      s.stats.min_detection_interval_s = std::numeric_limits<double>::infinity();

      auto& post = neurons_[s.stats.dst];
      auto it = std::find_if(post.components.begin(), post.components.end(),
                             [&](const Component& c) { return c.tau == s.tau; });
      if (it == post.components.end()) {
        post.components.push_back({s.tau, 0.0});
        it = post.components.end() - 1;
      }
      s.component = static_cast<std::size_t>(it - post.components.begin());
      if (p.inhibitory) post.has_inhibitory = true;
    }
  }

  void push(double t, EventKind kind, std::uint32_t target, std::uint64_t aux = 0) {
    queue_.push(Event{t, next_seq_++, kind, target, aux});
    if (queue_.size() > cfg_.max_pending_events) {
      fail("event queue overflow: more than " + std::to_string(cfg_.max_pending_events) + " pending events");
    }
  }

  void seed_drive() {
    for (const auto& s : cfg_.scheduled_drive) push(s.time_s, EventKind::drive_scheduled, s.neuron);
    drive_rngs_.reserve(cfg_.poisson_drive.size());
    for (std::size_t i = 0; i < cfg_.poisson_drive.size(); ++i) {
      drive_rngs_.emplace_back(cfg_.seed, StreamTag::drive, i);
      schedule_poisson(i, 0.0);
    }
  }

  void schedule_poisson(std::size_t index, double from) {
    const double rate = cfg_.poisson_drive[index].rate.value();
    if (!(rate > 0.0)) return;
    const double u = drive_rngs_[index].uniform();
    const double t = from - std::log1p(-u) / rate;
    if (t <= cfg_.duration.value()) push(t, EventKind::drive_poisson, cfg_.poisson_drive[index].neuron, index);
  }

  void dispatch(const Event& ev) {
    switch (ev.kind) {
      case EventKind::drive_scheduled:
        fire(ev.target, ev.t);
        break;
      case EventKind::drive_poisson:
        fire(ev.target, ev.t);
        schedule_poisson(ev.aux, ev.t);
        break;
      case EventKind::arrival:
        arrive(ev.target, ev.t);
        break;
      case EventKind::soma_check:
        soma_check(ev.target, ev.t, ev.aux);
        break;
    }
  }

  double membrane(NeuronRt& n, double t) {
    const double dt = t - n.t_ref;
    double m = 0.0;
    for (auto& c : n.components) {
      if (dt != 0.0) c.amp *= std::exp(-dt / c.tau);
      m += c.amp;
    }
    n.t_ref = t;
    return m;
  }

  double filter_at(const SynapseRt& s, double t) const {
    const auto& post = neurons_[s.stats.dst];
    if (s.filter_epoch != post.reset_epoch) return 0.0;
    return s.filter * std::exp(-(t - s.filter_t) / s.tau);
  }

  bool trial(SynapseRt& s) {
    switch (s.mode) {
      case DetectionMode::bernoulli:
        return s.detect_rng.uniform() < s.p_detect;
      case DetectionMode::poisson: {
        if (!(s.detect_mean > 0.0)) return false;
        std::poisson_distribution<std::int64_t> photons(s.detect_mean);
        const auto k = photons(s.detect_rng);
        return s.snspd ? k >= 1 : static_cast<double>(k) >= std::ceil(s.required_photons - 1e-9);
      }
      case DetectionMode::deterministic:
        return s.snspd ? s.detect_mean > 0.0 : s.detect_mean >= s.required_photons * (1.0 - 1e-12);
    }
    return false;
  }

  void fire(NodeId id, double t) {
    auto& n = neurons_[id];
    if (cfg_.record_spikes) result_.spikes.push_back({id, t});
    ++result_.spike_counts[id];
    result_.ledger.add(EnergyCategory::soma_overhead, id, Energy{n.overhead});
    for (auto e : g_.out_edges(id)) {
      result_.ledger.add(EnergyCategory::source_optical, id, Energy{synapses_[e].source_energy});
      push(t + n.delay, EventKind::arrival, e);
    }
    for (auto& c : n.components) c.amp = 0.0;
    n.t_ref = t;
    ++n.reset_epoch;
    ++n.version;
    n.refractory_until = t + n.refractory;
    n.last_spike = t;

    const auto in = g_.in_edges(id);
    result_.synapses.estimated_updates += std::sqrt(static_cast<double>(in.size()));
    if (stdp_) {
      for (auto e : in) {
        auto& s = synapses_[e];
        if (s.last_detection == never) continue;
        update_weight(s, s.last_detection, t);
      }
    }
  }

  void update_weight(SynapseRt& s, double pre, double post) {
    const auto before = s.cell.write_count;
    s.cell = apply_stdp(Time{pre}, Time{post}, s.cell, *stdp_, &s.noise_rng);
    if (s.cell.write_count != before) {
      ++s.stats.writes;
      result_.ledger.add(EnergyCategory::memory_update, s.stats.dst, s.params->update_energy);
    }
  }

  void arrive(std::uint32_t edge, double t) {
    auto& s = synapses_[edge];
    ++s.stats.arrivals;
    if (t < s.dead_until) {
      ++s.stats.deadtime_blocked;
      return;
    }
    if (!trial(s)) {
      ++s.stats.misses;
      return;
    }
    ++s.stats.detections;
    if (s.last_detection != never) {
      s.stats.min_detection_interval_s = std::min(s.stats.min_detection_interval_s, t - s.last_detection);
    }
    s.last_detection = t;
    s.dead_until = t + s.dead_time;

    const NodeId post_id = s.stats.dst;
    auto& post = neurons_[post_id];
    if (s.snspd) result_.ledger.add(EnergyCategory::detector_reset, post_id, Energy{s.reset_energy});
    if (s.cell.kind == MemoryKind::loop) {
      const auto fluxons = weight_to_fluxon_rate(s.cell, s.max_fluxons);
      s.stats.fluxons_emitted += static_cast<std::uint64_t>(fluxons);
      result_.ledger.add(EnergyCategory::fluxon, post_id, Energy{static_cast<double>(fluxons) * s.fluxon_unit});
    }

    const bool integrating = t >= post.refractory_until;
    if (integrating) {
      const double inc = s.sign * s.params->weight_scale * s.cell.normalized_weight();
      s.filter = filter_at(s, t) + inc;
      s.filter_t = t;
      s.filter_epoch = post.reset_epoch;
      membrane(post, t);
      post.components[s.component].amp += inc;
      ++post.version;
    }

    if (stdp_ && post.last_spike != never && post.last_spike < t) update_weight(s, t, post.last_spike);

    if (!integrating) return;
    const double m = membrane(post, t);
    if (!std::isfinite(m)) fail("non-finite membrane state at neuron " + std::to_string(post_id));
    if (m >= post.threshold) {
      fire(post_id, t);
    } else if (post.has_inhibitory) {
      schedule_crossing(post_id, t);
    }
  }

  // With mixed-sign components the membrane can rise between events. Scan a
  // geometric grid for the first threshold crossing and refine by bisection.
  void schedule_crossing(NodeId id, double t0) {
    const auto& n = neurons_[id];
    double tau_min = std::numeric_limits<double>::infinity();
    double tau_max = 0.0;
    for (const auto& c : n.components) {
      if (c.amp == 0.0) continue;
      tau_min = std::min(tau_min, c.tau);
      tau_max = std::max(tau_max, c.tau);
    }
    if (tau_max == 0.0) return;
    auto m_at = [&](double s) {
      double m = 0.0;
      for (const auto& c : n.components) m += c.amp * std::exp(-s / c.tau);
      return m;
    };
    constexpr int samples = 256;
    const double lo_s = tau_min * 1e-3;
    const double hi_s = tau_max * 20.0;
    const double ratio = std::pow(hi_s / lo_s, 1.0 / (samples - 1));
    double prev = 0.0;
    double s = lo_s;
    for (int i = 0; i < samples; ++i, s *= ratio) {
      if (m_at(s) >= n.threshold) {
        double a = prev;
        double b = s;
        for (int k = 0; k < 80; ++k) {
          const double mid = 0.5 * (a + b);
          (m_at(mid) >= n.threshold ? b : a) = mid;
        }
        if (t0 + b <= cfg_.duration.value()) push(t0 + b, EventKind::soma_check, id, n.version);
        return;
      }
      prev = s;
    }
  }

  void soma_check(NodeId id, double t, std::uint64_t version) {
    auto& n = neurons_[id];
    if (version != n.version || t < n.refractory_until) return;
    const double m = membrane(n, t);
    if (m >= n.threshold * (1.0 - 1e-9)) fire(id, t);
  }

  void remember(const Event& ev) {
    if (cfg_.trace_tail == 0) return;
    std::ostringstream os;
    os << "t=" << ev.t << " " << to_string(ev.kind) << " target=" << ev.target;
    trace_.push_back(os.str());
    if (trace_.size() > cfg_.trace_tail) trace_.pop_front();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SimulationError(what, std::vector<std::string>(trace_.begin(), trace_.end()));
  }

  void finish() {
    const double duration = cfg_.duration.value();
    auto& report = result_.synapses;
    report.synapses.reserve(synapses_.size());
    for (auto& s : synapses_) {
      if (!s.snspd) {
        const auto& pd = std::get<ReceiverlessPhotodiode>(s.params->link.receiver);
        result_.ledger.add(EnergyCategory::static_leakage, s.stats.dst,
                           photodiode_static_power(pd) * Time{duration});
      }
      s.stats.filter_value = filter_at(s, duration);
      s.stats.final_weight = s.cell.normalized_weight();
      s.stats.final_level = s.cell.level;
      s.stats.degraded = s.cell.degraded;
      report.arrivals += s.stats.arrivals;
      report.detections += s.stats.detections;
      report.misses += s.stats.misses;
      report.deadtime_blocked += s.stats.deadtime_blocked;
      report.writes += s.stats.writes;
      report.synapses.push_back(s.stats);
    }
  }

  const NetworkGraph& g_;
  const SimConfig& cfg_;
  std::optional<StdpParams> stdp_;
  std::vector<NeuronRt> neurons_;
  std::vector<SynapseRt> synapses_;
  std::vector<CounterRng> drive_rngs_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t next_seq_ = 0;
  std::deque<std::string> trace_;
  SimResult result_;
};

}  // namespace

SimResult run(const NetworkGraph& graph, const SimConfig& config) { return Engine(graph, config).run(); }

PowerReport power_report(const SimResult& result, const NetworkGraph& graph, const PlatformProfile& profile,
                         const PowerReportOptions& options) {
  if (!(result.duration.value() > 0.0)) throw DomainError("duration must be positive");
  const auto& ledger = result.ledger;
  const Time t = result.duration;
  PowerReport r;
  r.duration = t;
  r.cold_power = ledger.cold_total() / t;
  Energy cold_dynamic = ledger.cold_total();
  if (ledger.is_cold(EnergyCategory::static_leakage)) cold_dynamic -= ledger.total(EnergyCategory::static_leakage);
  r.cold_dynamic_power = cold_dynamic / t;
  r.room_power = ledger.room_total() / t;
  r.wall_power = ledger.cold_total() * profile.specific_power / t + r.room_power;
  r.density_limit = profile.power_density_limit;
  if (options.w_sy && graph.edge_count() > 0) {
    const Area synapse_area = static_cast<double>(graph.edge_count()) * (*options.w_sy) * (*options.w_sy);
    r.synapse_power_density = r.cold_power / synapse_area;
    r.density_ok = *r.synapse_power_density <= profile.power_density_limit;
  }
  const double n = static_cast<double>(graph.node_count());
  const double spikes = std::accumulate(result.spike_counts.begin(), result.spike_counts.end(), 0.0);
  r.mean_rate = Frequency{n > 0.0 ? spikes / (n * t.value()) : 0.0};
  if (options.budget) {
    r.budget = options.budget;
    r.budget_utilization = (r.wall_power / *options.budget).value();
    const double fanout = n > 0.0 ? static_cast<double>(graph.edge_count()) / n : 0.0;
    std::optional<Energy> per_event = options.wall_energy_per_synapse_event;
    if (!per_event && spikes > 0.0 && fanout > 0.0) {
      per_event = ledger.wall_total() / (spikes * fanout);
    }
    if (per_event && per_event->value() > 0.0 && fanout > 0.0) {
      r.predicted_max_rate = max_average_spike_rate(*options.budget, n, fanout, *per_event);
      r.rate_utilization = (r.mean_rate / *r.predicted_max_rate).value();
    }
  }
  return r;
}

}  // namespace optonet
