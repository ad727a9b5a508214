// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "optonet/commands.hpp"
#include "optonet/figures.hpp"
#include "optonet/linkbudget.hpp"
#include "optonet/membench.hpp"
#include "optonet/netgen.hpp"
#include "optonet/platform.hpp"
#include "optonet/scaling.hpp"
#include "optonet/scenario.hpp"
#include "optonet/simulator.hpp"

using namespace optonet;
using namespace optonet::literals;
namespace fs = std::filesystem;

namespace {

constexpr double h_ref = 6.62607015e-34;
constexpr double c_ref = 299792458.0;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
bool within(double v, double target, double tol) { return rel(v, target) <= tol; }

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (cond ? "" : " [x]");
  }
};

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check ac1() {
  Check c;
  const double n = photons_for_reliability(Probability{0.99}, Probability{0.7});
  c.require(std::abs(n - 6.579) <= 0.001 && std::ceil(n) == 7.0, "N_ph=" + g(n));
  const double e = link_source_energy(7.0, 1.5_um, Probability{1.0}).value();
  c.require(within(e, 7.0 * h_ref * c_ref / 1.5e-6, 1e-12) && std::abs(e - 0.927e-18) <= 0.0005e-18, "E=" + g(e) + " J");
  c.require(within(e, 0.9e-18, 0.05), "vs 0.9 aJ " + g(rel(e, 0.9e-18) * 100) + "%");
  return c;
}

Check ac2() {
  Check c;
  const ReceiverlessPhotodiode pd;
  const double e = receiverless_optical_energy(pd, Probability{1.0}, 1.5_um).value();
  const double n = receiverless_photon_count(pd, 1.5_um);
  c.require(std::abs(e - 0.662e-15) <= 0.001e-15, "E=" + g(e) + " J");
  c.require(within(n, 5000.0, 0.05), "photons=" + g(n));
  c.require(within(e, 0.7e-15, 0.15), "vs 0.7 fJ " + g(rel(e, 0.7e-15) * 100) + "%");
  return c;
}

Check ac3() {
  Check c;
  const auto e = snspd_reset_energy(100.0_nH, 10.0_uA);
  c.require(within(e.value(), 5e-18, 1e-12), "E_reset=" + g(e.value()) + " J");
  auto profile = builtin_profile("superconducting-4K");
  const double wall = wall_energy(e, profile).value();
  c.require(profile.specific_power == 1000.0 && wall >= 1e-15, "wall=" + g(wall) + " J");
  return c;
}

Check ac4() {
  Check c;
  const auto s = squid_from_critical_current(300.0_uA);
  c.require(within(s.w_sq.value(), 2.19e-6, 0.02), "w_sq=" + g(s.w_sq.value()) + " m");
  c.require(within(s.e_sq.value(), 1.24e-18, 0.02), "E_sq=" + g(s.e_sq.value()) + " J");
  const double f = fluxon_budget(100.0_aJ, 300.0_uA);
  c.require(std::abs(f - 161.0) <= 1.0, "fluxons=" + g(f));
  c.require(within(f, 170.0, 0.10), "vs 170 " + g(rel(f, 170.0) * 100) + "%");
  return c;
}

Check ac5() {
  Check c;
  const double k = required_degree(1e6, 3.0);
  c.require(within(k, 199.7, 0.01), "k(1e6,3)=" + g(k));
  const double k2 = required_degree(1e8, 2.0);
  c.require(k2 > 1e5, "k(1e8,2)=" + g(k2));
  const double k3 = required_degree(1e8, 3.0);
  c.require(k3 > 1e3, "k(1e8,3)=" + g(k3));
  const double l = achievable_path_length(1e6, 100.0);
  c.require(std::abs(l - 3.37) <= 0.005, "L(1e6,100)=" + g(l));
  c.require(within(l, 3.5, 0.05), "vs 3.5 " + g(rel(l, 3.5) * 100) + "%");
  return c;
}

Check ac6() {
  Check c;
  const auto a = required_planes(1e6, 2.5, 2.0_um, 10.0_um);
  const auto b = required_planes(1e6, 2.5, 2.0_um, 30.0_um);
  c.require(a.p_e >= 0.9 && a.p_e <= 1.3, "p_e(10um)=" + g(a.p_e));
  c.require(b.p_e >= 8.0 && b.p_e <= 11.0, "p_e(30um)=" + g(b.p_e));
  c.require(a.p_p >= 4.5 && a.p_p <= 7.0, "p_p(2um)=" + g(a.p_p));
  return c;
}

Check ac7() {
  Check c;
  const SystemAssumptions a;
  const double u = lifetime_updates(a);
  c.require(std::abs(u - 3.16e11) <= 0.005e11, "updates=" + g(u));
  const double e = max_update_energy(a).value();
  c.require(std::abs(e - 3.16e-12) <= 0.005e-12, "E_max=" + g(e) + " J");
  const auto t = target_table(a);
  const std::vector<std::pair<std::string, std::string>> expected{{"Endurance", "> 10^11 updates"},
                                                                   {"Update Energy", "< 3 pJ"},
                                                                   {"Update Speed", "< 100 ns"},
                                                                   {"Weight Precision", "4-8 bits"}};
  bool verbatim = t.size() == expected.size();
  for (std::size_t i = 0; verbatim && i < t.size(); ++i) {
    verbatim = t[i].metric == expected[i].first && t[i].goal == expected[i].second;
  }
  c.require(verbatim, "table verbatim");
  return c;
}

Check ac8() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = validate_eq6({2000}, {16.0}, 10, 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& r = rep.rows.at(0);
  c.require(rel(r.empirical_mean, 2.76) <= 0.15, "BFS mean=" + g(r.empirical_mean) + " vs 2.76 (" +
                                                     g(rel(r.empirical_mean, 2.76) * 100) + "%)");
  c.require(r.relative_error <= 0.15, "vs formula " + g(r.prediction) + " (" + g(r.relative_error * 100) + "%)");
  c.require(secs < 60.0, "runtime " + g(secs) + " s");
  return c;
}

Check ac9() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sc = load_scenario(bundled_data_dir() / "scenarios" / "poisson-link.json");
  const auto& link = sc.config.synapse_defaults.link;
  const double n_eta = link.n_ph * std::get<SnspdReceiver>(link.receiver).eta_d.value();
  c.require(std::abs(n_eta - 4.605) <= 0.001, "N*eta=" + g(n_eta));
  const auto r = run(sc.graph, sc.config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double n = static_cast<double>(r.synapses.detections + r.synapses.misses);
  const double p = 1.0 - std::exp(-n_eta);
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  const double frac = r.synapses.detected_fraction();
  c.require(n == 1e5, "trials=" + g(n));
  c.require(std::abs(frac - 0.99) <= 3.0 * sigma,
            "fraction=" + g(frac) + " (" + g(std::abs(frac - 0.99) / sigma) + " sigma)");
  c.require(secs < 10.0, "runtime " + g(secs) + " s");
  return c;
}

Check ac10() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto path = bundled_data_dir() / "scenarios" / "ledger-fanout.json";
  const auto sc = load_scenario(path);
  const auto r = run(sc.graph, sc.config);
  std::uint64_t source_spikes = 0;
  for (NodeId i = 0; i < sc.graph.node_count(); ++i) {
    if (!sc.graph.out_edges(i).empty()) source_spikes += r.spike_counts[i];
  }
  const double expected = 1000.0 * 10.0 * 7.0 * h_ref * c_ref / 1.5e-6 / 0.01;
  const double got = r.ledger.total(EnergyCategory::source_optical).value();
  c.require(source_spikes == 1000 && sc.graph.edge_count() == 10, "spikes x fanout = " + std::to_string(source_spikes) + " x 10");
  c.require(rel(got, expected) <= 1e-9, "source_optical=" + g(got) + " J (rel " + g(rel(got, expected)) + ")");

  const auto base = fs::temp_directory_path() / "optonet_acceptance";
  std::string first_spikes, first_ledger;
  bool identical = true;
  for (int i = 0; i < 2; ++i) {
    GlobalOptions opts;
    opts.config = path;
    opts.out = base / std::to_string(i);
    fs::remove_all(*opts.out);
    std::ostringstream sink;
    if (cmd_simulate(opts, sink) != exit_code::ok) identical = false;
    const auto spikes = slurp(*opts.out / "spikes.csv");
    const auto ledger = slurp(*opts.out / "ledger.json");
    if (i == 0) {
      first_spikes = spikes;
      first_ledger = ledger;
    } else {
      identical = identical && spikes == first_spikes && ledger == first_ledger && !ledger.empty();
    }
  }
  fs::remove_all(base);
  c.require(identical, "rerun byte-identical");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 5.0, "runtime " + g(secs) + " s");
  return c;
}

Check ac11() {
  Check c;
  const TimeConstantSpec spec;
  const double cmos = cmos_max_time_constant(10.0_um, spec).value();
  const double sc = sc_max_time_constant(30.0_um, spec).tau_max.value();
  c.require(within(cmos, 5.0, 0.01), "CMOS tau(10um)=" + g(cmos) + " s");
  c.require(within(sc, 324.0, 0.01), "SC tau(30um)=" + g(sc) + " s");
  // The figure's own width grid, then a 20-point log grid over (10, 100] um.
  const auto fig = build_figure("fig7");
  bool fig_ok = true;
  int fig_points = 0;
  for (std::size_t i = 0; i < fig.rows.size(); ++i) {
    if (fig.real(i, "w_sy_m") <= 10e-6) continue;
    fig_ok = fig_ok && fig.real(i, "sc_tau_max_s") > fig.real(i, "cmos_tau_s");
    ++fig_points;
  }
  c.require(fig_ok && fig_points > 0, "SC > CMOS on " + std::to_string(fig_points) + " fig7 widths > 10 um");
  bool log_ok = true;
  for (int i = 1; i <= 20; ++i) {
    const Length w{10e-6 * std::pow(10.0, i / 20.0)};
    log_ok = log_ok && sc_max_time_constant(w, spec).tau_max > cmos_max_time_constant(w, spec);
  }
  c.require(log_ok, "SC > CMOS on 20 log widths in (10, 100] um");
  // Bisect the crossover for the report.
  double lo = 1e-6, hi = 100e-6;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sc_max_time_constant(Length{mid}, spec).tau_max > cmos_max_time_constant(Length{mid}, spec) ? hi : lo) = mid;
  }
  c.detail << "; crossover " << g(hi * 1e6) << " um";
  return c;
}

Check ac12() {
  Check c;
  const double a = carnot_specific_power(300.0_K, 4.0_K);
  const double b = carnot_specific_power(300.0_K, 4.2_K);
  c.require(std::abs(a - 74.0) <= 0.1, "Carnot(300,4.0)=" + g(a));
  c.require(std::abs(b - 70.4) <= 0.1, "Carnot(300,4.2)=" + g(b));
  const double e_sc = link_source_energy(7.0, 1.5_um, Probability{1e-4}).value();
  const double f_sc = power_density_spike_limit(30.0_um, Energy{e_sc}, PowerDensity{1e4}).value();
  const double e_pd = receiverless_optical_energy(ReceiverlessPhotodiode{}, Probability{1e-3}, 1.5_um).value();
  const double f_pd = power_density_spike_limit(10.0_um, Energy{e_pd}, PowerDensity{1e7}).value();
  c.require(f_sc >= 0.6e9 && f_sc <= 1.6e9, "SC 30um limit=" + g(f_sc) + " Hz");
  c.require(f_pd >= 0.6e9 && f_pd <= 1.6e9, "PD 10um limit=" + g(f_pd) + " Hz");
  return c;
}

Check ac13() {
  Check c;
  const Energy per_event{1e-15 / 1e-5};
  const double f = max_average_spike_rate(10.0_MW, 1e10, 1e3, per_event).value();
  c.require(within(f, 1e4, 1e-9), "f=" + g(f) + " Hz");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 detection reliability and photon energy", ac1},
      {"AC2 receiverless photodiode energy", ac2},
      {"AC3 SNSPD reset and wall energy", ac3},
      {"AC4 SQUID sizing and fluxon budget", ac4},
      {"AC5 degree/path-length anchors", ac5},
      {"AC6 wafer plane counts", ac6},
      {"AC7 memory benchmark targets", ac7},
      {"AC8 random-graph path length oracle", ac8},
      {"AC9 Bernoulli link statistics", ac9},
      {"AC10 ledger exactness and rerun determinism", ac10},
      {"AC11 synaptic time constants", ac11},
      {"AC12 refrigeration and power density", ac12},
      {"AC13 power-limited spike rate", ac13},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << g(ms) << " ms): " << c.detail.str() << '\n';
  }
  std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
