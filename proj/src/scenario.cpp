#include "optonet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "optonet/error.hpp"
#include "optonet/linkbudget.hpp"
#include "optonet/platform.hpp"

namespace optonet {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

/// Collects problems while walking a config tree.
class Reader {
 public:
  std::vector<std::string> problems;

  void fail(const std::string& path, const std::string& msg) { problems.push_back(path + ": " + msg); }

  bool object(const json& j, const std::string& path) {
    if (j.is_object()) return true;
    fail(path, "expected an object");
    return false;
  }

  void keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) return;
    for (const auto& [k, _] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        std::string list;
        for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        fail(join(path, k), "unknown key (accepted: " + list + ")");
      }
    }
  }

  std::optional<double> real(const json& obj, const std::string& path, std::string_view key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) {
      fail(join(path, key), "expected a number");
      return std::nullopt;
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
      fail(join(path, key), "must be finite");
      return std::nullopt;
    }
    return v;
  }

  double real_or(const json& obj, const std::string& path, std::string_view key, double fallback) {
    return real(obj, path, key).value_or(fallback);
  }

  std::optional<std::uint64_t> count(const json& obj, const std::string& path, std::string_view key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (it->is_number_unsigned()) return it->get<std::uint64_t>();
    if (it->is_number_float()) {
      const double v = it->get<double>();
      if (v >= 0.0 && v == std::floor(v) && v < 1.8e19) return static_cast<std::uint64_t>(v);
    }
    fail(join(path, key), "expected a non-negative integer");
    return std::nullopt;
  }

  std::optional<bool> boolean(const json& obj, const std::string& path, std::string_view key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_boolean()) {
      fail(join(path, key), "expected true or false");
      return std::nullopt;
    }
    return it->get<bool>();
  }

  std::optional<std::string> text(const json& obj, const std::string& path, std::string_view key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
      fail(join(path, key), "expected a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  template <typename F>
  void check(const std::string& path, F&& f) {
    try {
      f();
    } catch (const ConfigError& e) {
      for (const auto& p : e.problems()) fail(path, p);
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }

  Probability probability(const json& obj, const std::string& path, std::string_view key, double fallback) {
    const double v = real_or(obj, path, key, fallback);
    if (!(v >= 0.0 && v <= 1.0)) {
      fail(join(path, key), "must lie in [0, 1]");
      return Probability{fallback};
    }
    return Probability{v};
  }
};

PlatformProfile parse_profile(Reader& r, const json& j, const std::string& path) {
  if (j.is_string()) {
    if (auto p = find_builtin_profile(j.get<std::string>())) return *p;
    std::string names;
    for (const auto& n : builtin_profile_names()) names += (names.empty() ? "" : ", ") + n;
    r.fail(path, "unknown profile '" + j.get<std::string>() + "' (built-in: " + names + ")");
    return builtin_profile("superconducting-4K");
  }
  if (!r.object(j, path)) return builtin_profile("superconducting-4K");
  r.keys(j, path, {"base", "name", "specific_power", "t_hot_k", "t_cold_k", "power_density_limit_w_m2", "wavelength_m", "default_eta"});
  PlatformProfile p = builtin_profile("superconducting-4K");
  if (auto base = r.text(j, path, "base")) {
    if (auto b = find_builtin_profile(*base)) {
      p = *b;
    } else {
      r.fail(join(path, "base"), "unknown profile '" + *base + "'");
    }
  }
  if (auto name = r.text(j, path, "name")) p.name = *name;
  p.specific_power = r.real_or(j, path, "specific_power", p.specific_power);
  p.t_hot = Temperature{r.real_or(j, path, "t_hot_k", p.t_hot.value())};
  p.t_cold = Temperature{r.real_or(j, path, "t_cold_k", p.t_cold.value())};
  p.power_density_limit = PowerDensity{r.real_or(j, path, "power_density_limit_w_m2", p.power_density_limit.value())};
  p.wavelength = Length{r.real_or(j, path, "wavelength_m", p.wavelength.value())};
  p.default_eta = r.probability(j, path, "default_eta", p.default_eta.value());
  return p;
}

ReceiverModel parse_receiver(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path)) return SnspdReceiver{};
  const auto type = r.text(j, path, "type").value_or("snspd");
  if (type == "snspd") {
    r.keys(j, path, {"type", "eta_d", "l_spd_h", "i_spd_a", "reset_time_s", "max_count_rate_hz"});
    SnspdReceiver s;
    s.eta_d = r.probability(j, path, "eta_d", s.eta_d.value());
    s.l_spd = Inductance{r.real_or(j, path, "l_spd_h", s.l_spd.value())};
    s.i_spd = Current{r.real_or(j, path, "i_spd_a", s.i_spd.value())};
    s.reset_time = Time{r.real_or(j, path, "reset_time_s", s.reset_time.value())};
    s.max_count_rate = Frequency{r.real_or(j, path, "max_count_rate_hz", s.max_count_rate.value())};
    return s;
  }
  if (type == "photodiode") {
    r.keys(j, path, {"type", "c_tot_f", "v_swing_v", "responsivity_a_w", "i_leak_a", "v_bias_v"});
    ReceiverlessPhotodiode p;
    p.c_tot = Capacitance{r.real_or(j, path, "c_tot_f", p.c_tot.value())};
    p.v_swing = Voltage{r.real_or(j, path, "v_swing_v", p.v_swing.value())};
    p.responsivity = Responsivity{r.real_or(j, path, "responsivity_a_w", p.responsivity.value())};
    p.i_leak = Current{r.real_or(j, path, "i_leak_a", p.i_leak.value())};
    p.v_bias = Voltage{r.real_or(j, path, "v_bias_v", p.v_bias.value())};
    return p;
  }
  r.fail(join(path, "type"), "unknown receiver '" + type + "' (accepted: snspd, photodiode)");
  return SnspdReceiver{};
}

MemoryCell parse_memory(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path)) return MemoryCell::analog(1.0);
  const auto kind = r.text(j, path, "kind").value_or("analog");
  if (kind == "loop") {
    r.keys(j, path, {"kind", "bits", "level"});
    const auto bits = r.count(j, path, "bits").value_or(10);
    if (bits < 1 || bits > 10) {
      r.fail(join(path, "bits"), "must lie in [1, 10]");
      return MemoryCell::loop(10, 0);
    }
    const auto max_level = (std::int64_t{1} << bits) - 1;
    const auto level = static_cast<std::int64_t>(r.count(j, path, "level").value_or(static_cast<std::uint64_t>(max_level)));
    return MemoryCell::loop(static_cast<int>(bits), level);
  }
  if (kind == "analog") {
    r.keys(j, path, {"kind", "value", "write_noise_std", "endurance"});
    return MemoryCell::analog(r.real_or(j, path, "value", 1.0), r.real_or(j, path, "write_noise_std", 0.0),
                              r.count(j, path, "endurance").value_or(std::numeric_limits<std::uint64_t>::max()));
  }
  r.fail(join(path, "kind"), "unknown memory kind '" + kind + "' (accepted: loop, analog)");
  return MemoryCell::analog(1.0);
}

SynapseParams parse_synapse(Reader& r, const json& j, const std::string& path, const PlatformProfile& profile) {
  SynapseParams s;
  s.link.wavelength = profile.wavelength;
  s.link.eta = profile.default_eta;
  if (!r.object(j, path)) return s;
  r.keys(j, path, {"wavelength_m", "eta", "n_ph", "p_detect", "receiver", "tau_s", "weight_scale", "inhibitory", "memory",
                   "detection", "max_fluxons", "i_c_a", "update_energy_j"});
  s.link.wavelength = Length{r.real_or(j, path, "wavelength_m", s.link.wavelength.value())};
  s.link.eta = r.probability(j, path, "eta", s.link.eta.value());
  if (j.contains("receiver")) s.link.receiver = parse_receiver(r, j["receiver"], join(path, "receiver"));

  const auto n_ph = r.real(j, path, "n_ph");
  const auto p_detect = r.real(j, path, "p_detect");
  if (n_ph && p_detect) r.fail(path, "give either n_ph or p_detect, not both");
  if (n_ph) {
    s.link.n_ph = *n_ph;
  } else if (p_detect) {
    if (!(*p_detect >= 0.0 && *p_detect < 1.0)) {
      r.fail(join(path, "p_detect"), "must lie in [0, 1)");
    } else if (const auto* rx = std::get_if<SnspdReceiver>(&s.link.receiver)) {
      r.check(join(path, "p_detect"), [&] { s.link.n_ph = photons_for_reliability(Probability{*p_detect}, rx->eta_d); });
    } else {
      r.fail(join(path, "p_detect"), "applies to SNSPD receivers only");
    }
  } else if (const auto* pd = std::get_if<ReceiverlessPhotodiode>(&s.link.receiver)) {
    r.check(path, [&] { s.link.n_ph = receiverless_photon_count(*pd, s.link.wavelength); });
  }

  s.tau = Time{r.real_or(j, path, "tau_s", s.tau.value())};
  s.weight_scale = r.real_or(j, path, "weight_scale", s.weight_scale);
  s.inhibitory = r.boolean(j, path, "inhibitory").value_or(false);
  if (j.contains("memory")) s.memory = parse_memory(r, j["memory"], join(path, "memory"));
  if (auto mode = r.text(j, path, "detection")) {
    if (*mode == "bernoulli") {
      s.detection_mode = DetectionMode::bernoulli;
    } else if (*mode == "poisson") {
      s.detection_mode = DetectionMode::poisson;
    } else if (*mode == "deterministic") {
      s.detection_mode = DetectionMode::deterministic;
    } else {
      r.fail(join(path, "detection"), "unknown mode '" + *mode + "' (accepted: bernoulli, poisson, deterministic)");
    }
  }
  s.max_fluxons = r.real(j, path, "max_fluxons");
  s.i_c = Current{r.real_or(j, path, "i_c_a", s.i_c.value())};
  s.update_energy = Energy{r.real_or(j, path, "update_energy_j", s.update_energy.value())};
  r.check(path, [&] { s.validate(); });
  return s;
}

NeuronParams parse_neuron(Reader& r, const json& j, const std::string& path) {
  NeuronParams n;
  if (!r.object(j, path)) return n;
  r.keys(j, path, {"threshold", "refractory_s", "transmit_delay_s", "spike_overhead_j"});
  n.threshold = r.real_or(j, path, "threshold", n.threshold);
  if (!(n.threshold > 0.0)) r.fail(join(path, "threshold"), "must be positive");
  if (auto v = r.real(j, path, "refractory_s")) {
    if (*v < 0.0) r.fail(join(path, "refractory_s"), "must be non-negative");
    n.refractory = Time{*v};
  }
  if (auto v = r.real(j, path, "transmit_delay_s")) {
    if (*v < 0.0) r.fail(join(path, "transmit_delay_s"), "must be non-negative");
    n.transmit_delay = Time{*v};
  }
  n.spike_overhead = Energy{r.real_or(j, path, "spike_overhead_j", 0.0)};
  if (n.spike_overhead.value() < 0.0) r.fail(join(path, "spike_overhead_j"), "must be non-negative");
  return n;
}

std::vector<Edge> parse_edges(Reader& r, const json& j, const std::string& path) {
  std::vector<Edge> edges;
  if (!j.is_array()) {
    r.fail(path, "expected an array of [src, dst] pairs");
    return edges;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      r.fail(path + "[" + std::to_string(i) + "]", "expected [src, dst] with non-negative integers");
      continue;
    }
    edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
  }
  return edges;
}

NetworkGraph parse_graph(Reader& r, const json& j, const std::string& path, std::uint64_t seed,
                         const std::filesystem::path& base_dir) {
  if (!r.object(j, path)) return {};
  const auto kind = r.text(j, path, "kind").value_or("");
  NetworkGraph g;
  if (kind == "explicit") {
    r.keys(j, path, {"kind", "n", "edges"});
    const auto n = r.count(j, path, "n");
    if (!n) r.fail(join(path, "n"), "required");
    const auto edges = j.contains("edges") ? parse_edges(r, j["edges"], join(path, "edges")) : std::vector<Edge>{};
    if (n) r.check(path, [&] { g = NetworkGraph(*n, edges, seed); });
  } else if (kind == "er") {
    r.keys(j, path, {"kind", "n", "mean_degree", "seed"});
    const auto n = r.count(j, path, "n");
    const auto k = r.real(j, path, "mean_degree");
    if (!n) r.fail(join(path, "n"), "required");
    if (!k) r.fail(join(path, "mean_degree"), "required");
    const auto gseed = r.count(j, path, "seed").value_or(seed);
    if (n && k) r.check(path, [&] { g = generate_er(*n, *k, gseed); });
  } else if (kind == "fanout") {
    // One source neuron (0) driving `targets` downstream neurons.
    r.keys(j, path, {"kind", "targets"});
    const auto t = r.count(j, path, "targets");
    if (!t || *t == 0) {
      r.fail(join(path, "targets"), "required positive integer");
    } else {
      std::vector<Edge> edges;
      for (NodeId i = 1; i <= *t; ++i) edges.push_back({0, i});
      g = NetworkGraph(*t + 1, std::move(edges), seed);
    }
  } else if (kind == "edge_list") {
    r.keys(j, path, {"kind", "path"});
    if (auto p = r.text(j, path, "path")) {
      std::filesystem::path file(*p);
      if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
      std::ifstream in(file);
      if (!in) {
        r.fail(join(path, "path"), "cannot read " + file.string());
      } else {
        r.check(join(path, "path"), [&] { g = read_edge_list(in); });
      }
    } else {
      r.fail(join(path, "path"), "required");
    }
  } else {
    r.fail(join(path, "kind"), "expected one of explicit, er, fanout, edge_list");
  }
  return g;
}

void parse_drive(Reader& r, const json& j, const std::string& path, SimConfig& cfg) {
  if (!r.object(j, path)) return;
  r.keys(j, path, {"poisson", "schedule", "periodic"});
  const auto each = [&](std::string_view key, auto&& f) {
    const auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_array()) {
      r.fail(join(path, key), "expected an array");
      return;
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto p = join(path, key) + "[" + std::to_string(i) + "]";
      if (r.object((*it)[i], p)) f((*it)[i], p);
    }
  };
  const auto neuron = [&](const json& item, const std::string& p) {
    const auto n = r.count(item, p, "neuron");
    if (!n) r.fail(join(p, "neuron"), "required");
    return static_cast<NodeId>(n.value_or(0));
  };
  each("poisson", [&](const json& item, const std::string& p) {
    r.keys(item, p, {"neuron", "rate_hz"});
    const auto rate = r.real(item, p, "rate_hz");
    if (!rate || *rate < 0.0) r.fail(join(p, "rate_hz"), "required non-negative rate");
    cfg.poisson_drive.push_back({neuron(item, p), Frequency{rate.value_or(0.0)}});
  });
  each("schedule", [&](const json& item, const std::string& p) {
    r.keys(item, p, {"neuron", "time_s"});
    const auto t = r.real(item, p, "time_s");
    if (!t || *t < 0.0) r.fail(join(p, "time_s"), "required non-negative time");
    cfg.scheduled_drive.push_back({neuron(item, p), t.value_or(0.0)});
  });
  each("periodic", [&](const json& item, const std::string& p) {
    r.keys(item, p, {"neuron", "start_s", "interval_s", "count"});
    const NodeId n = neuron(item, p);
    const double start = r.real_or(item, p, "start_s", 0.0);
    const auto interval = r.real(item, p, "interval_s");
    const auto count = r.count(item, p, "count");
    if (start < 0.0) r.fail(join(p, "start_s"), "must be non-negative");
    if (!interval || !(*interval > 0.0)) r.fail(join(p, "interval_s"), "required positive interval");
    if (!count) r.fail(join(p, "count"), "required");
    if (!interval || !(*interval > 0.0) || !count || start < 0.0) return;
    for (std::uint64_t i = 0; i < *count; ++i) {
      cfg.scheduled_drive.push_back({n, start + static_cast<double>(i) * *interval});
    }
  });
}

std::optional<StdpParams> parse_plasticity(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path)) return std::nullopt;
  const auto rule = r.text(j, path, "rule").value_or("off");
  if (rule == "off") {
    r.keys(j, path, {"rule"});
    return std::nullopt;
  }
  if (rule != "stdp") {
    r.fail(join(path, "rule"), "expected off or stdp");
    return std::nullopt;
  }
  r.keys(j, path, {"rule", "a_plus", "a_minus", "tau_plus_s", "tau_minus_s", "analog_step", "on_exhausted"});
  StdpParams p;
  p.a_plus = r.real_or(j, path, "a_plus", p.a_plus);
  p.a_minus = r.real_or(j, path, "a_minus", p.a_minus);
  p.tau_plus = Time{r.real_or(j, path, "tau_plus_s", 0.0)};  // 0: derived from the drive
  p.tau_minus = Time{r.real_or(j, path, "tau_minus_s", 0.0)};
  p.analog_step = r.real_or(j, path, "analog_step", p.analog_step);
  if (auto pol = r.text(j, path, "on_exhausted")) {
    if (*pol == "freeze") {
      p.on_exhausted = EndurancePolicy::freeze;
    } else if (*pol == "fault") {
      p.on_exhausted = EndurancePolicy::fault;
    } else {
      r.fail(join(path, "on_exhausted"), "expected freeze or fault");
    }
  }
  return p;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot read " + path.string()});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({path.string() + ": malformed JSON: " + e.what()});
  }
}

}  // namespace

void apply_assignment(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  json* node = &config;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw UsageError("empty path segment in '" + key + "'");
    if (!node->is_object()) {
      if (!node->is_null()) throw UsageError("'" + key + "' descends into a non-object value");
      *node = json::object();
    }
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    node = &(*node)[part];
    start = dot + 1;
  }
}

Scenario parse_scenario(json config, const ScenarioOverrides& overrides, const std::filesystem::path& base_dir) {
  for (const auto& a : overrides.assignments) apply_assignment(config, a);
  if (overrides.seed) config["seed"] = *overrides.seed;
  if (overrides.profile) {
    if (config.contains("profile") && config["profile"].is_object()) {
      config["profile"]["base"] = *overrides.profile;
    } else {
      config["profile"] = *overrides.profile;
    }
  }

  Reader r;
  Scenario sc;
  sc.effective = config;
  if (!r.object(config, "config")) throw ConfigError(std::move(r.problems));
  r.keys(config, "", {"name", "seed", "duration_s", "profile", "graph", "synapse", "synapse_overrides", "neuron",
                      "neuron_overrides", "drive", "plasticity", "record", "limits", "report"});
  sc.name = r.text(config, "", "name").value_or("scenario");
  auto& cfg = sc.config;
  cfg.seed = r.count(config, "", "seed").value_or(0);
  if (auto d = r.real(config, "", "duration_s")) {
    if (!(*d > 0.0)) r.fail("duration_s", "must be positive");
    cfg.duration = Time{*d};
  } else {
    r.fail("duration_s", "required");
  }
  if (config.contains("profile")) cfg.platform = parse_profile(r, config["profile"], "profile");
  r.check("profile", [&] { cfg.platform.validate(); });

  if (config.contains("graph")) {
    sc.graph = parse_graph(r, config["graph"], "graph", cfg.seed, base_dir);
  } else {
    r.fail("graph", "required");
  }
  const std::size_t n = sc.graph.node_count();
  const std::size_t m = sc.graph.edge_count();

  const json syn = config.value("synapse", json::object());
  cfg.synapse_defaults = parse_synapse(r, syn, "synapse", cfg.platform);
  if (const auto it = config.find("synapse_overrides"); it != config.end()) {
    if (!it->is_array()) {
      r.fail("synapse_overrides", "expected an array");
    } else {
      cfg.synapses.assign(m, std::nullopt);
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto path = "synapse_overrides[" + std::to_string(i) + "]";
        const auto& item = (*it)[i];
        if (!r.object(item, path)) continue;
        const auto edge = r.count(item, path, "edge");
        if (!edge || *edge >= m) {
          r.fail(join(path, "edge"), "required index below " + std::to_string(m));
          continue;
        }
        json merged = syn;
        json patch = item;
        patch.erase("edge");
        merged.merge_patch(patch);
        cfg.synapses[*edge] = parse_synapse(r, merged, path, cfg.platform);
      }
    }
  }

  const json neu = config.value("neuron", json::object());
  cfg.neuron_defaults = parse_neuron(r, neu, "neuron");
  if (const auto it = config.find("neuron_overrides"); it != config.end()) {
    if (!it->is_array()) {
      r.fail("neuron_overrides", "expected an array");
    } else {
      cfg.neurons.assign(n, std::nullopt);
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto path = "neuron_overrides[" + std::to_string(i) + "]";
        const auto& item = (*it)[i];
        if (!r.object(item, path)) continue;
        const auto node = r.count(item, path, "neuron");
        if (!node || *node >= n) {
          r.fail(join(path, "neuron"), "required index below " + std::to_string(n));
          continue;
        }
        json merged = neu;
        json patch = item;
        patch.erase("neuron");
        merged.merge_patch(patch);
        cfg.neurons[*node] = parse_neuron(r, merged, path);
      }
    }
  }

  if (config.contains("drive")) parse_drive(r, config["drive"], "drive", cfg);
  for (const auto& d : cfg.poisson_drive) {
    if (d.neuron >= n) r.fail("drive", "Poisson drive targets missing neuron " + std::to_string(d.neuron));
  }
  for (const auto& s : cfg.scheduled_drive) {
    if (s.neuron >= n) {
      r.fail("drive", "scheduled drive targets missing neuron " + std::to_string(s.neuron));
      break;
    }
  }
  if (config.contains("plasticity")) cfg.plasticity = parse_plasticity(r, config["plasticity"], "plasticity");
  if (cfg.plasticity && (cfg.plasticity->tau_plus.value() == 0.0 || cfg.plasticity->tau_minus.value() == 0.0)) {
    r.check("plasticity", [&] { (void)default_stdp_params(cfg); });
  }

  if (const auto it = config.find("record"); it != config.end() && r.object(*it, "record")) {
    r.keys(*it, "record", {"spikes"});
    cfg.record_spikes = r.boolean(*it, "record", "spikes").value_or(true);
  }
  if (const auto it = config.find("limits"); it != config.end() && r.object(*it, "limits")) {
    r.keys(*it, "limits", {"max_pending_events", "trace_tail"});
    cfg.max_pending_events = r.count(*it, "limits", "max_pending_events").value_or(cfg.max_pending_events);
    cfg.trace_tail = r.count(*it, "limits", "trace_tail").value_or(cfg.trace_tail);
    if (cfg.max_pending_events == 0) r.fail("limits.max_pending_events", "must be positive");
  }
  if (const auto it = config.find("report"); it != config.end() && r.object(*it, "report")) {
    r.keys(*it, "report", {"w_sy_m", "power_budget_w", "wall_energy_per_synapse_event_j"});
    if (auto w = r.real(*it, "report", "w_sy_m")) {
      if (!(*w > 0.0)) r.fail("report.w_sy_m", "must be positive");
      sc.report.w_sy = Length{*w};
    }
    if (auto b = r.real(*it, "report", "power_budget_w")) {
      if (!(*b > 0.0)) r.fail("report.power_budget_w", "must be positive");
      sc.report.budget = Power{*b};
    }
    if (auto e = r.real(*it, "report", "wall_energy_per_synapse_event_j")) {
      if (!(*e > 0.0)) r.fail("report.wall_energy_per_synapse_event_j", "must be positive");
      sc.report.wall_energy_per_synapse_event = Energy{*e};
    }
  }
  if (!r.problems.empty()) throw ConfigError(std::move(r.problems));
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path, const ScenarioOverrides& overrides) {
  return parse_scenario(read_json_file(path), overrides, path.parent_path());
}

MembenchConfig parse_membench(const json& config) {
  Reader r;
  MembenchConfig out;
  if (!r.object(config, "config")) throw ConfigError(std::move(r.problems));
  r.keys(config, "", {"assumptions", "technologies"});
  if (const auto it = config.find("assumptions"); it != config.end() && r.object(*it, "assumptions")) {
    const std::string p = "assumptions";
    r.keys(*it, p, {"lifetime_s", "mean_rate_hz", "fanin", "e_opt_j", "max_rate_hz"});
    auto& a = out.assumptions;
    a.lifetime = Time{r.real_or(*it, p, "lifetime_s", a.lifetime.value())};
    a.mean_rate = Frequency{r.real_or(*it, p, "mean_rate_hz", a.mean_rate.value())};
    a.fanin = r.real_or(*it, p, "fanin", a.fanin);
    a.e_opt = Energy{r.real_or(*it, p, "e_opt_j", a.e_opt.value())};
    a.max_rate = Frequency{r.real_or(*it, p, "max_rate_hz", a.max_rate.value())};
    r.check(p, [&] { a.validate(); });
  }
  const auto it = config.find("technologies");
  if (it == config.end() || !it->is_array()) {
    r.fail("technologies", "required array");
  } else {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto p = "technologies[" + std::to_string(i) + "]";
      const auto& t = (*it)[i];
      if (!r.object(t, p)) continue;
      r.keys(t, p, {"name", "endurance", "update_energy_j", "update_time_s", "precision_bits", "volatile_on_warmup",
                    "programming_voltage_v", "note"});
      MemoryTechSpec spec;
      spec.name = r.text(t, p, "name").value_or("");
      if (spec.name.empty()) r.fail(join(p, "name"), "required");
      spec.endurance = r.real(t, p, "endurance");
      if (auto e = r.real(t, p, "update_energy_j")) spec.update_energy = Energy{*e};
      if (auto s = r.real(t, p, "update_time_s")) spec.update_time = Time{*s};
      spec.precision_bits = r.real(t, p, "precision_bits");
      spec.volatile_on_warmup = r.boolean(t, p, "volatile_on_warmup");
      if (auto v = r.real(t, p, "programming_voltage_v")) spec.programming_voltage = Voltage{*v};
      (void)r.text(t, p, "note");
      for (const auto* key : {"endurance", "update_energy_j", "update_time_s", "precision_bits"}) {
        if (auto v = r.real(t, p, key); v && *v < 0.0) r.fail(join(p, key), "must be non-negative");
      }
      out.technologies.push_back(std::move(spec));
    }
  }
  if (!r.problems.empty()) throw ConfigError(std::move(r.problems));
  return out;
}

MembenchConfig load_membench(const std::filesystem::path& path) { return parse_membench(read_json_file(path)); }

std::filesystem::path bundled_data_dir() { return std::filesystem::path(OPTONET_DATA_DIR); }

}  // namespace optonet
