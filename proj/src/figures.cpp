#include "optonet/figures.hpp"

#include <cmath>
#include <sstream>

#include "optonet/dataset.hpp"
#include "optonet/error.hpp"
#include "optonet/linkbudget.hpp"
#include "optonet/photonics.hpp"
#include "optonet/platform.hpp"
#include "optonet/scaling.hpp"

namespace optonet {

Overrides Overrides::from_assignments(const std::vector<std::string>& items) {
  std::map<std::string, std::string> values;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("override '" + item + "' is not key=value");
    values[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return Overrides(std::move(values));
}

double Overrides::real(const std::string& key, double fallback) {
  accepted_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) {
    effective_[key] = format_real(fallback);
    return fallback;
  }
  try {
    const double v = parse_real(it->second);
    effective_[key] = format_real(v);
    return v;
  } catch (const std::exception&) {
    throw UsageError("override " + key + "='" + it->second + "' is not a number");
  }
}

std::vector<double> Overrides::reals(const std::string& key, std::vector<double> fallback) {
  accepted_.insert(key);
  auto it = values_.find(key);
  std::vector<double> out;
  if (it == values_.end()) {
    out = std::move(fallback);
  } else {
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(parse_real(item));
      } catch (const std::exception&) {
        throw UsageError("override " + key + " contains non-number '" + item + "'");
      }
    }
    if (out.empty()) throw UsageError("override " + key + " is an empty list");
  }
  std::string joined;
  for (double v : out) joined += (joined.empty() ? "" : ",") + format_real(v);
  effective_[key] = joined;
  return out;
}

void Overrides::finish(std::string_view context) const {
  std::string unknown;
  for (const auto& [k, _] : values_) {
    if (!accepted_.contains(k)) unknown += (unknown.empty() ? "" : ", ") + k;
  }
  if (unknown.empty()) return;
  std::string allowed;
  for (const auto& k : accepted_) allowed += (allowed.empty() ? "" : ", ") + k;
  throw UsageError("unknown parameter(s) for " + std::string(context) + ": " + unknown +
                   " (accepted: " + allowed + ")");
}

std::vector<double> log_grid(double min, double max, int per_decade) {
  if (!(min > 0.0) || !(max >= min) || per_decade < 1) throw UsageError("invalid log grid");
  std::vector<double> out;
  const double start = std::log10(min);
  const double stop = std::log10(max) + 1e-9;
  for (int i = 0;; ++i) {
    const double e = start + static_cast<double>(i) / per_decade;
    if (e > stop) break;
    const double rounded = std::round(e);
    out.push_back(std::abs(e - rounded) < 1e-9 ? std::pow(10.0, rounded) : std::pow(10.0, e));
  }
  return out;
}

std::vector<std::string> figure_ids() { return {"fig3", "fig4", "fig6", "fig7", "fig8", "fig9"}; }

namespace {

using nlohmann::json;

json provenance(std::string_view id, std::string_view description, const Overrides& o) {
  json p;
  p["dataset"] = id;
  p["description"] = description;
  p["parameters"] = o.effective();
  p["artifact_version"] = artifact_version;
  p["seed"] = nullptr;
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Dataset fig3(Overrides o) {
  const Length wavelength{o.real("wavelength_m", 1.5e-6)};
  const double fanout = o.real("fanout", 1000.0);
  const Probability eta{o.real("eta", 1.0)};
  const Probability eta_d{o.real("eta_d", 0.7)};
  const Probability p_detect{o.real("p_detect", 0.99)};
  ReceiverlessPhotodiode pd;
  pd.c_tot = Capacitance{o.real("c_tot_f", 1e-15)};
  pd.v_swing = Voltage{o.real("v_swing_v", 0.8)};
  const auto rates = log_grid(o.real("rate_min_hz", 1e3), o.real("rate_max_hz", 1e10),
                              static_cast<int>(o.real("points_per_decade", 4)));
  o.finish("fig3");

  const double photons = std::ceil(photons_for_reliability(p_detect, eta_d));
  const Energy sc_receiver = link_source_energy(photons, wavelength, Probability{1.0});
  const Energy sm_receiver = receiverless_optical_energy(pd, Probability{1.0}, wavelength);

  Dataset d;
  d.name = "fig3";
  d.columns = {{"spike_rate_hz"}, {"fanout"}, {"eta"}, {"superconducting_receiver_energy_j"},
               {"semiconductor_receiver_energy_j"}, {"superconducting_power_w"}, {"semiconductor_power_w"}};
  for (double r : rates) {
    const Frequency f{r};
    d.add_row({r, fanout, eta.value(), sc_receiver.value(), sm_receiver.value(),
               transmitter_power(fanout, sc_receiver, f, eta).value(),
               transmitter_power(fanout, sm_receiver, f, eta).value()});
  }
  d.provenance = provenance("fig3", "Transmitter optical power to drive a neuron's fan-out within one inter-spike interval", o);
  return d;
}

Dataset fig4(Overrides o) {
  const double path_length = o.real("path_length", 2.5);
  const Length w_wg{o.real("w_wg_m", 2e-6)};
  const auto w_sy = o.reals("w_sy_m", {10e-6, 30e-6});
  Wafer wafer;
  wafer.diameter = Length{o.real("wafer_diameter_m", 0.3)};
  wafer.fill_factor = o.real("fill_factor", 1.0);
  const auto n_values = log_grid(o.real("n_min", 1e4), o.real("n_max", 1e8),
                                 static_cast<int>(o.real("points_per_decade", 4)));
  o.finish("fig4");

  Dataset d;
  d.name = "fig4";
  d.columns = {{"n_300"}, {"path_length"}, {"w_wg_m"}, {"w_sy_m"}, {"degree"}, {"p_p"}, {"p_e"},
               {"p_p_ceil", ColumnType::integer}, {"p_e_ceil", ColumnType::integer}};
  for (double w : w_sy) {
    for (double n : n_values) {
      const auto req = required_planes(n, path_length, w_wg, Length{w}, wafer);
      d.add_row({n, path_length, w_wg.value(), w, req.degree, req.p_p, req.p_e,
                 static_cast<std::int64_t>(std::ceil(req.p_p)), static_cast<std::int64_t>(std::ceil(req.p_e))});
    }
  }
  d.provenance = provenance("fig4", "Photonic and electronic planes needed to hold a path length on one wafer", o);
  return d;
}

Dataset fig6(Overrides o) {
  const Power budget{o.real("budget_w", 10e6)};
  const double fanout = o.real("fanout", 1000.0);
  const Energy receiver{o.real("receiver_energy_j", 1e-15)};
  const auto etas = o.reals("etas", {1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5});
  const auto n_values = log_grid(o.real("n_min", 1e6), o.real("n_max", 1e12),
                                 static_cast<int>(o.real("points_per_decade", 4)));
  o.finish("fig6");

  Dataset d;
  d.name = "fig6";
  d.columns = {{"n_neurons"}, {"eta"}, {"fanout"}, {"energy_per_synapse_event_j"}, {"max_rate_hz"}};
  for (double eta : etas) {
    require(eta > 0.0 && eta <= 1.0, "eta must lie in (0, 1]");
    const Energy e = receiver / eta;
    for (double n : n_values) {
      d.add_row({n, eta, fanout, e.value(), max_average_spike_rate(budget, n, fanout, e).value()});
    }
  }
  d.provenance = provenance("fig6", "Largest mean spike rate under a fixed power budget versus network size", o);
  return d;
}

Dataset fig7(Overrides o) {
  const auto widths = o.reals("w_sy_m", {1e-6, 2e-6, 3e-6, 5e-6, 7e-6, 10e-6, 15e-6, 20e-6, 30e-6, 50e-6,
                                         70e-6, 100e-6});
  TimeConstantSpec spec;
  spec.c_density = ArealCapacitance{o.real("c_density_f_per_m2", spec.c_density.value())};
  spec.v_th = Voltage{o.real("v_th_v", spec.v_th.value())};
  spec.kappa = o.real("kappa", spec.kappa);
  spec.i_tau = Current{o.real("i_tau_a", spec.i_tau.value())};
  spec.l_square = InductancePerSquare{o.real("l_square_h", spec.l_square.value())};
  spec.r_s = SheetResistance{o.real("r_s_ohm", spec.r_s.value())};
  spec.w_wire = Length{o.real("w_wire_m", spec.w_wire.value())};
  spec.w_gap = Length{o.real("w_gap_m", spec.w_gap.value())};
  o.finish("fig7");

  Dataset d;
  d.name = "fig7";
  d.columns = {{"w_sy_m"}, {"c_si_f"}, {"cmos_tau_s"}, {"l_si_h"}, {"r_si_ohm"}, {"sc_tau_max_s"}};
  for (double w : widths) {
    const Length width{w};
    const auto sc = sc_max_time_constant(width, spec);
    d.add_row({w, (spec.c_density * width * width).value(), cmos_max_time_constant(width, spec).value(),
               sc.l_si.value(), sc.r_si.value(), sc.tau_max.value()});
  }
  d.provenance = provenance("fig7", "Largest synaptic time constant versus synapse width, CMOS and superconducting", o);
  return d;
}

Dataset fig8(Overrides o) {
  const auto path_lengths = o.reals("path_lengths", {2.0, 2.5, 3.0, 3.5, 4.0});
  const auto n_values = log_grid(o.real("n_min", 1e3), o.real("n_max", 1e11),
                                 static_cast<int>(o.real("points_per_decade", 4)));
  o.finish("fig8");

  Dataset d;
  d.name = "fig8";
  d.columns = {{"n_total"}, {"path_length"}, {"degree"}};
  for (double l : path_lengths) {
    for (double n : n_values) d.add_row({n, l, required_degree(n, l)});
  }
  d.provenance = provenance("fig8", "Mean degree needed for a target path length versus network size", o);
  return d;
}

Dataset fig9(Overrides o) {
  const auto n_300 = o.reals("n_300", {1e5, 1e6, 1e7});
  const auto planes = o.reals("planes", {1.0, 10.0});
  const auto w_sy = o.reals("w_sy_m", log_grid(1e-6, 100e-6, 8));
  const auto w_wg = o.reals("w_wg_m", log_grid(0.5e-6, 10e-6, 8));
  Wafer wafer;
  wafer.diameter = Length{o.real("wafer_diameter_m", 0.3)};
  wafer.fill_factor = o.real("fill_factor", 1.0);
  o.finish("fig9");

  Dataset d;
  d.name = "fig9";
  d.columns = {{"axis", ColumnType::text}, {"n_300"}, {"planes"}, {"width_m"}, {"max_degree"},
               {"path_length"}, {"feasible", ColumnType::integer}};
  auto emit = [&](WidthAxis axis, const std::vector<double>& widths) {
    std::vector<Length> w;
    for (double x : widths) w.emplace_back(x);
    for (const auto& p : sweep_path_length_vs_width(axis, n_300, planes, w, wafer)) {
      d.add_row({to_string(p.axis), p.n_300, p.planes, p.width.value(), p.max_degree, p.path_length,
                 std::int64_t{p.feasible ? 1 : 0}});
    }
  };
  emit(WidthAxis::synapse, w_sy);
  emit(WidthAxis::waveguide, w_wg);
  d.provenance = provenance("fig9", "Achievable path length versus synapse width and waveguide pitch", o);
  return d;
}

}  // namespace

Dataset build_figure(std::string_view id, Overrides overrides) {
  try {
    if (id == "fig3") return fig3(std::move(overrides));
    if (id == "fig4") return fig4(std::move(overrides));
    if (id == "fig6") return fig6(std::move(overrides));
    if (id == "fig7") return fig7(std::move(overrides));
    if (id == "fig8") return fig8(std::move(overrides));
    if (id == "fig9") return fig9(std::move(overrides));
  } catch (const DomainError& e) {
    throw UsageError(std::string(id) + ": " + e.what());
  }
  throw UsageError("unknown figure '" + std::string(id) + "' (expected fig3, fig4, fig6, fig7, fig8, fig9)");
}

}  // namespace optonet
