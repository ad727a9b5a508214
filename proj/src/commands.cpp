#include "optonet/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>

#include "optonet/calc.hpp"
#include "optonet/error.hpp"
#include "optonet/figures.hpp"
#include "optonet/membench.hpp"
#include "optonet/netgen.hpp"
#include "optonet/scenario.hpp"
#include "optonet/simulator.hpp"

namespace optonet {

using nlohmann::json;

namespace {

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << body;
}

template <typename T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (requires { v->value(); }) {
    return v->value();
  } else {
    return *v;
  }
}

json ledger_json(const EnergyLedger& l) {
  json j;
  j["specific_power"] = l.specific_power();
  j["categories"] = json::object();
  for (auto c : all_energy_categories) {
    j["categories"][std::string(to_string(c))] = {
        {"energy_j", l.total(c).value()}, {"events", l.events(c)}, {"cold", l.is_cold(c)}};
  }
  j["cold_total_j"] = l.cold_total().value();
  j["room_total_j"] = l.room_total().value();
  j["wall_total_j"] = l.wall_total().value();
  return j;
}

json synapse_json(const SynapseReport& s) {
  json j;
  j["arrivals"] = s.arrivals;
  j["detections"] = s.detections;
  j["misses"] = s.misses;
  j["deadtime_blocked"] = s.deadtime_blocked;
  j["writes"] = s.writes;
  j["detected_fraction"] = s.detected_fraction();
  j["estimated_updates"] = s.estimated_updates;
  j["synapses"] = json::array();
  for (const auto& x : s.synapses) {
    j["synapses"].push_back({{"edge", x.edge},
                             {"src", x.src},
                             {"dst", x.dst},
                             {"arrivals", x.arrivals},
                             {"detections", x.detections},
                             {"misses", x.misses},
                             {"deadtime_blocked", x.deadtime_blocked},
                             {"writes", x.writes},
                             {"fluxons_emitted", x.fluxons_emitted},
                             {"min_detection_interval_s", std::isfinite(x.min_detection_interval_s)
                                                              ? json(x.min_detection_interval_s)
                                                              : json(nullptr)},
                             {"filter_value", x.filter_value},
                             {"final_weight", x.final_weight},
                             {"final_level", x.final_level},
                             {"degraded", x.degraded}});
  }
  return j;
}

json power_json(const PowerReport& p) {
  return {{"duration_s", p.duration.value()},
          {"cold_power_w", p.cold_power.value()},
          {"cold_dynamic_power_w", p.cold_dynamic_power.value()},
          {"room_power_w", p.room_power.value()},
          {"wall_power_w", p.wall_power.value()},
          {"synapse_power_density_w_m2", opt(p.synapse_power_density)},
          {"density_limit_w_m2", p.density_limit.value()},
          {"density_ok", opt(p.density_ok)},
          {"budget_w", opt(p.budget)},
          {"budget_utilization", opt(p.budget_utilization)},
          {"mean_rate_hz", p.mean_rate.value()},
          {"predicted_max_rate_hz", opt(p.predicted_max_rate)},
          {"rate_utilization", opt(p.rate_utilization)}};
}

std::string fmt(double v) { return format_real(v); }

}  // namespace

std::filesystem::path output_dir(const GlobalOptions& opts) {
  if (opts.out) return *opts.out;
  if (const char* env = std::getenv("OPTONET_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return "out";
}

int cmd_calc(const std::string& formula, const std::vector<std::string>& args, const GlobalOptions& opts,
             std::ostream& out) {
  const auto result = calc(formula, parse_calc_args(args));
  if (opts.format == OutputFormat::json) {
    out << result.to_json().dump(2) << '\n';
  } else {
    out << result.to_text();
  }
  return exit_code::ok;
}

int cmd_figure(const std::string& id, const GlobalOptions& opts, std::ostream& out) {
  auto d = build_figure(id, Overrides::from_assignments(opts.set));
  if (opts.seed) d.provenance["seed"] = *opts.seed;
  if (opts.profile) d.provenance["profile"] = *opts.profile;
  const auto path = write_dataset(d, output_dir(opts), opts.format.value_or(OutputFormat::csv));
  out << path.string() << '\n';
  return exit_code::ok;
}

int cmd_simulate(const GlobalOptions& opts, std::ostream& out) {
  if (!opts.config) throw UsageError("simulate needs --config PATH");
  const auto sc = load_scenario(*opts.config, ScenarioOverrides{opts.seed, opts.profile, opts.set});
  const auto result = run(sc.graph, sc.config);
  const auto power = power_report(result, sc.graph, sc.config.platform, sc.report);
  const auto dir = output_dir(opts);
  std::filesystem::create_directories(dir);

  Dataset spikes;
  spikes.name = "spikes";
  spikes.columns = {{"neuron_id", ColumnType::integer}, {"time_s", ColumnType::real}};
  for (const auto& s : result.spikes) spikes.rows.push_back({static_cast<std::int64_t>(s.neuron), s.time_s});
  spikes.provenance = {{"dataset", "spikes"},
                       {"scenario", sc.name},
                       {"parameters", sc.effective},
                       {"artifact_version", artifact_version},
                       {"seed", sc.config.seed}};
  const auto format = opts.format.value_or(OutputFormat::csv);
  const auto spikes_path = dir / (format == OutputFormat::json ? "spikes.json" : "spikes.csv");
  if (format == OutputFormat::json) {
    write_file(spikes_path, to_json(spikes).dump(2) + "\n");
  } else {
    write_file(spikes_path, to_csv(spikes));
    write_file(dir / "spikes.provenance.json", spikes.provenance.dump(2) + "\n");
  }

  json doc;
  doc["scenario"] = sc.name;
  doc["seed"] = sc.config.seed;
  doc["artifact_version"] = artifact_version;
  doc["profile"] = sc.config.platform.name;
  doc["neurons"] = sc.graph.node_count();
  doc["synapses"] = sc.graph.edge_count();
  doc["events_processed"] = result.events_processed;
  doc["spike_counts"] = result.spike_counts;
  doc["ledger"] = ledger_json(result.ledger);
  doc["synapse_report"] = synapse_json(result.synapses);
  doc["power_report"] = power_json(power);
  const auto ledger_path = dir / "ledger.json";
  write_file(ledger_path, doc.dump(2) + "\n");

  const auto total_spikes = std::accumulate(result.spike_counts.begin(), result.spike_counts.end(), std::uint64_t{0});
  out << "scenario: " << sc.name << " (seed " << sc.config.seed << ", profile " << sc.config.platform.name << ")\n"
      << "neurons: " << sc.graph.node_count() << ", synapses: " << sc.graph.edge_count() << '\n'
      << "spikes: " << total_spikes << ", mean rate: " << fmt(power.mean_rate.value()) << " Hz\n"
      << "detections: " << result.synapses.detections << " of " << (result.synapses.detections + result.synapses.misses)
      << " trials (fraction " << fmt(result.synapses.detected_fraction()) << "), dead-time blocked "
      << result.synapses.deadtime_blocked << '\n'
      << "source optical energy: " << fmt(result.ledger.total(EnergyCategory::source_optical).value()) << " J\n"
      << "wall energy: " << fmt(result.ledger.wall_total().value()) << " J, wall power: " << fmt(power.wall_power.value())
      << " W\n";
  if (power.budget_utilization) out << "budget utilization: " << fmt(*power.budget_utilization) << '\n';
  if (power.density_ok) {
    out << "synapse power density: " << fmt(power.synapse_power_density->value()) << " W/m^2 ("
        << (*power.density_ok ? "within" : "exceeds") << " limit " << fmt(power.density_limit.value()) << ")\n";
  }
  out << "wrote " << spikes_path.string() << '\n' << "wrote " << ledger_path.string() << '\n';
  return exit_code::ok;
}

int cmd_validate_eq6(const Eq6Options& eq6, const GlobalOptions& opts, std::ostream& out) {
  if (eq6.n.empty() || eq6.k.empty()) throw UsageError("validate-eq6 needs at least one --n and one --k");
  if (eq6.seeds == 0) throw UsageError("--seeds must be positive");
  const auto report = validate_eq6(eq6.n, eq6.k, eq6.seeds, opts.seed.value_or(0), eq6.tolerance);

  Dataset d;
  d.name = "eq6_validation";
  d.columns = {{"n", ColumnType::integer},          {"k", ColumnType::real},
               {"seeds", ColumnType::integer},      {"empirical_mean", ColumnType::real},
               {"empirical_std", ColumnType::real}, {"prediction", ColumnType::real},
               {"relative_error", ColumnType::real}, {"min_reachable_fraction", ColumnType::real},
               {"realized_mean_degree", ColumnType::real}, {"within_tolerance", ColumnType::integer}};
  bool all_ok = true;
  out << "n,k,empirical_mean,prediction,relative_error,within_tolerance\n";
  for (const auto& r : report.rows) {
    d.add_row({static_cast<std::int64_t>(r.n), r.k, static_cast<std::int64_t>(r.seeds), r.empirical_mean, r.empirical_std,
               r.prediction, r.relative_error, r.min_reachable_fraction, r.realized_mean_degree,
               std::int64_t{r.within_tolerance ? 1 : 0}});
    out << r.n << ',' << fmt(r.k) << ',' << fmt(r.empirical_mean) << ',' << fmt(r.prediction) << ','
        << fmt(r.relative_error) << ',' << (r.within_tolerance ? "yes" : "no") << '\n';
    all_ok = all_ok && r.within_tolerance;
  }
  d.provenance = {{"dataset", "eq6_validation"},
                  {"parameters", {{"n", eq6.n}, {"k", eq6.k}, {"seeds", eq6.seeds}, {"tolerance", eq6.tolerance}}},
                  {"artifact_version", artifact_version},
                  {"seed", opts.seed.value_or(0)}};
  if (opts.out || std::getenv("OPTONET_OUT_DIR") != nullptr) {
    out << "wrote " << write_dataset(d, output_dir(opts), opts.format.value_or(OutputFormat::csv)).string() << '\n';
  }
  return all_ok ? exit_code::ok : exit_code::runtime_error;
}

int cmd_membench(const GlobalOptions& opts, std::ostream& out) {
  const auto path = opts.config.value_or(bundled_data_dir() / "data" / "memory_technologies.json");
  auto cfg = load_membench(path);
  for (const auto& a : opts.set) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + a + "'");
    const auto key = a.substr(0, eq);
    double v = 0.0;
    try {
      v = parse_real(a.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("value for " + key + " is not a number");
    }
    auto& s = cfg.assumptions;
    if (key == "lifetime_s") {
      s.lifetime = Time{v};
    } else if (key == "mean_rate_hz") {
      s.mean_rate = Frequency{v};
    } else if (key == "fanin") {
      s.fanin = v;
    } else if (key == "e_opt_j") {
      s.e_opt = Energy{v};
    } else if (key == "max_rate_hz") {
      s.max_rate = Frequency{v};
    } else {
      throw UsageError("unknown membench override '" + key +
                       "' (accepted: lifetime_s, mean_rate_hz, fanin, e_opt_j, max_rate_hz)");
    }
  }
  try {
    cfg.assumptions.validate();
  } catch (const DomainError& e) {
    throw ConfigError({std::string("assumptions: ") + e.what()});
  }

  json doc;
  doc["targets"] = json::array();
  out << "targets:\n";
  for (const auto& t : target_table(cfg.assumptions)) {
    out << "  " << t.metric << ": " << t.goal << '\n';
    doc["targets"].push_back({{"metric", t.metric}, {"goal", t.goal}});
  }
  doc["technologies"] = json::array();
  for (const auto& tech : cfg.technologies) {
    const auto rep = score_technology(tech, cfg.assumptions);
    out << tech.name << ": " << to_string(rep.overall) << '\n';
    json jt{{"name", tech.name}, {"overall", to_string(rep.overall)}, {"metrics", json::array()}};
    for (const auto& m : rep.metrics) {
      out << "  " << m.metric << ": " << to_string(m.verdict);
      if (m.margin) out << " (margin " << fmt(*m.margin) << ")";
      if (!m.note.empty()) out << " - " << m.note;
      out << '\n';
      jt["metrics"].push_back({{"metric", m.metric},
                               {"verdict", to_string(m.verdict)},
                               {"value", opt(m.value)},
                               {"target", m.target},
                               {"at_least", m.at_least},
                               {"margin", opt(m.margin)},
                               {"note", m.note}});
    }
    doc["technologies"].push_back(std::move(jt));
  }
  if (opts.format == OutputFormat::json) {
    const auto dir = output_dir(opts);
    std::filesystem::create_directories(dir);
    write_file(dir / "membench.json", doc.dump(2) + "\n");
    out << "wrote " << (dir / "membench.json").string() << '\n';
  }
  return exit_code::ok;
}

int run_command(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage_error;
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return exit_code::config_error;
  } catch (const SimulationError& e) {
    err << "simulation error: " << e.what() << '\n';
    if (!e.trace_tail().empty()) {
      err << "last events:\n";
      for (const auto& line : e.trace_tail()) err << "  " << line << '\n';
    }
    return exit_code::runtime_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::runtime_error;
  }
}

}  // namespace optonet
