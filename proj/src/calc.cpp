#include "optonet/calc.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "optonet/dataset.hpp"
#include "optonet/error.hpp"
#include "optonet/linkbudget.hpp"
#include "optonet/membench.hpp"
#include "optonet/photonics.hpp"
#include "optonet/platform.hpp"
#include "optonet/scaling.hpp"

namespace optonet {

namespace {

using Params = std::map<std::string, double>;
using Outputs = std::vector<CalcOutput>;

struct Entry {
  CalcFormula formula;
  std::function<Outputs(const Params&)> eval;
};

CalcParam req(std::string name, std::string description) { return {std::move(name), std::move(description), true, 0.0}; }
CalcParam opt(std::string name, std::string description, double fallback) {
  return {std::move(name), std::move(description), false, fallback};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"photon", "single-photon energy h·c/λ", {req("lambda", "wavelength [m]")}},
       [](const Params& p) { return Outputs{{"photon_energy", photon_energy(Length{p.at("lambda")}).value(), "J"}}; }},
      {{"responsivity", "quantum-limited responsivity q·λ/(h·c)", {req("lambda", "wavelength [m]")}},
       [](const Params& p) {
         return Outputs{{"responsivity", quantum_limited_responsivity(Length{p.at("lambda")}).value(), "A/W"}};
       }},
      {{"eq1", "probability that a photon pulse is missed", {req("nph", "mean photons at receiver"), req("etad", "detection efficiency")}},
       [](const Params& p) {
         const auto miss = miss_probability(p.at("nph"), Probability{p.at("etad")});
         return Outputs{{"miss_probability", miss.value(), "1"}, {"detection_probability", 1.0 - miss.value(), "1"}};
       }},
      {{"eq1-inv", "photons needed for a detection probability", {req("p", "detection probability"), req("etad", "detection efficiency")}},
       [](const Params& p) {
         const double n = photons_for_reliability(Probability{p.at("p")}, Probability{p.at("etad")});
         return Outputs{{"photons", n, "1"}, {"photons_ceil", std::ceil(n), "1"}};
       }},
      {{"eq2", "source optical energy per spike N·hν/η",
        {req("nph", "photons at receiver"), opt("lambda", "wavelength [m]", 1.5e-6), opt("eta", "link efficiency", 1.0)}},
       [](const Params& p) {
         return Outputs{{"source_energy", link_source_energy(p.at("nph"), Length{p.at("lambda")}, Probability{p.at("eta")}).value(), "J"}};
       }},
      {{"reset", "SNSPD reset energy ½·L·I²",
        {opt("l", "kinetic inductance [H]", 100e-9), opt("i", "bias current [A]", 10e-6), opt("sp", "specific power [W/W]", 1000.0)}},
       [](const Params& p) {
         const Energy e = snspd_reset_energy(Inductance{p.at("l")}, Current{p.at("i")});
         return Outputs{{"reset_energy", e.value(), "J"}, {"wall_energy", e.value() * p.at("sp"), "J"}};
       }},
      {{"eq3", "receiverless photodiode optical energy C·V/(η·R)",
        {opt("c", "total capacitance [F]", 1e-15), opt("v", "voltage swing [V]", 0.8),
         opt("r", "responsivity [A/W]; 0 = quantum-limited", 0.0), opt("lambda", "wavelength [m]", 1.5e-6),
         opt("eta", "link efficiency", 1.0)}},
       [](const Params& p) {
         ReceiverlessPhotodiode pd;
         pd.c_tot = Capacitance{p.at("c")};
         pd.v_swing = Voltage{p.at("v")};
         pd.responsivity = Responsivity{p.at("r")};
         const Length lambda{p.at("lambda")};
         const Energy e = receiverless_optical_energy(pd, Probability{p.at("eta")}, lambda);
         return Outputs{{"optical_energy", e.value(), "J"}, {"photons_at_receiver", receiverless_photon_count(pd, lambda), "1"}};
       }},
      {{"static", "photodiode leakage power V·I", {opt("vbias", "bias [V]", 1.0), opt("ileak", "leakage current [A]", 1e-9)}},
       [](const Params& p) {
         ReceiverlessPhotodiode pd;
         pd.v_bias = Voltage{p.at("vbias")};
         pd.i_leak = Current{p.at("ileak")};
         return Outputs{{"static_power", photodiode_static_power(pd).value(), "W"}};
       }},
      {{"fstatic", "spike rate below which leakage dominates",
        {opt("c", "total capacitance [F]", 1e-15), opt("v", "voltage swing [V]", 0.8), opt("r", "responsivity [A/W]; 0 = quantum-limited", 0.0),
         opt("vbias", "bias [V]", 1.0), opt("ileak", "leakage current [A]", 1e-9), opt("lambda", "wavelength [m]", 1.5e-6),
         opt("eta", "link efficiency", 0.01)}},
       [](const Params& p) {
         ReceiverlessPhotodiode pd;
         pd.c_tot = Capacitance{p.at("c")};
         pd.v_swing = Voltage{p.at("v")};
         pd.responsivity = Responsivity{p.at("r")};
         pd.v_bias = Voltage{p.at("vbias")};
         pd.i_leak = Current{p.at("ileak")};
         OpticalLink link;
         link.wavelength = Length{p.at("lambda")};
         link.eta = Probability{p.at("eta")};
         link.receiver = pd;
         return Outputs{{"static_dominance_frequency", static_dominance_frequency(pd, link).value(), "Hz"}};
       }},
      {{"transmitter", "transmitter optical power for a fan-out",
        {opt("fanout", "downstream synapses", 1000.0), req("e", "receiver energy per synapse [J]"), req("rate", "spike rate [Hz]"),
         opt("eta", "link efficiency", 1.0)}},
       [](const Params& p) {
         return Outputs{{"transmitter_power",
                         transmitter_power(p.at("fanout"), Energy{p.at("e")}, Frequency{p.at("rate")}, Probability{p.at("eta")}).value(), "W"}};
       }},
      {{"carnot", "Carnot specific power (T_h - T_c)/T_c", {opt("thot", "hot temperature [K]", 300.0), opt("tcold", "cold temperature [K]", 4.2)}},
       [](const Params& p) {
         return Outputs{{"specific_power", carnot_specific_power(Temperature{p.at("thot")}, Temperature{p.at("tcold")}), "W/W"}};
       }},
      {{"wall", "wall-plug power for a cold-stage load", {req("p", "cold power [W] (or energy [J])"), opt("sp", "specific power [W/W]", 1000.0)}},
       [](const Params& p) { return Outputs{{"wall", p.at("p") * p.at("sp"), "W"}}; }},
      {{"maxrate", "largest mean spike rate within a power budget",
        {opt("budget", "power budget [W]", 10e6), req("neurons", "neuron count"), opt("fanout", "fan-out", 1000.0),
         req("e", "energy per synapse event [J]")}},
       [](const Params& p) {
         return Outputs{{"max_rate", max_average_spike_rate(Power{p.at("budget")}, p.at("neurons"), p.at("fanout"), Energy{p.at("e")}).value(), "Hz"}};
       }},
      {{"density", "spike rate at the areal power-density limit",
        {req("wsy", "synapse width [m]"), req("e", "on-chip energy per event [J]"), req("limit", "power density limit [W/m²]")}},
       [](const Params& p) {
         return Outputs{{"max_rate", power_density_spike_limit(Length{p.at("wsy")}, Energy{p.at("e")}, PowerDensity{p.at("limit")}).value(), "Hz"}};
       }},
      {{"squid", "SQUID size and energy from critical current", {req("ic", "critical current [A]")}},
       [](const Params& p) {
         const auto s = squid_from_critical_current(Current{p.at("ic")});
         return Outputs{{"w_sq", s.w_sq.value(), "m"}, {"e_sq", s.e_sq.value(), "J"}, {"l_sq", s.l_sq.value(), "H"}};
       }},
      {{"fluxons", "fluxons producible from an energy budget", {req("e", "energy budget [J]"), opt("ic", "critical current [A]", 300e-6)}},
       [](const Params& p) { return Outputs{{"fluxons", fluxon_budget(Energy{p.at("e")}, Current{p.at("ic")}), "1"}}; }},
      {{"dpi", "DPI synapse time constant C·V_th/(κ·I_τ)",
        {req("c", "capacitance [F]"), opt("vth", "thermal voltage [V]", 25e-3), opt("kappa", "subthreshold slope factor", 1.0),
         opt("itau", "leak current [A]", 10e-15)}},
       [](const Params& p) {
         return Outputs{{"tau", dpi_time_constant(Capacitance{p.at("c")}, Voltage{p.at("vth")}, p.at("kappa"), Current{p.at("itau")}).value(), "s"}};
       }},
      {{"sctau", "largest superconducting L/r time constant in w_sy²",
        {req("wsy", "synapse width [m]"), opt("lsq", "inductance per square [H]", 160e-12), opt("rs", "sheet resistance [Ω]", 1e-3),
         opt("wwire", "wire width [m]", 100e-9), opt("wgap", "gap width [m]", 100e-9)}},
       [](const Params& p) {
         TimeConstantSpec spec;
         spec.l_square = InductancePerSquare{p.at("lsq")};
         spec.r_s = SheetResistance{p.at("rs")};
         spec.w_wire = Length{p.at("wwire")};
         spec.w_gap = Length{p.at("wgap")};
         const auto sc = sc_max_time_constant(Length{p.at("wsy")}, spec);
         return Outputs{{"l_si", sc.l_si.value(), "H"}, {"r_si", sc.r_si.value(), "ohm"}, {"tau_max", sc.tau_max.value(), "s"}};
       }},
      {{"eq6", "mean degree needed for a path length", {req("n", "network size"), req("L", "mean path length")}},
       [](const Params& p) { return Outputs{{"degree", required_degree(p.at("n"), p.at("L")), "1"}}; }},
      {{"eq6-inv", "path length achievable at a mean degree", {req("n", "network size"), req("k", "mean degree")}},
       [](const Params& p) { return Outputs{{"path_length", achievable_path_length(p.at("n"), p.at("k")), "1"}}; }},
      {{"eq7", "photonic area per neuron (k·w_wg/p_p)²",
        {req("k", "degree"), opt("wwg", "waveguide pitch [m]", 2e-6), opt("pp", "photonic planes", 1.0)}},
       [](const Params& p) { return Outputs{{"area", photonic_area(p.at("k"), Length{p.at("wwg")}, p.at("pp")).value(), "m^2"}}; }},
      {{"eq8", "electronic area per neuron k·w_sy²/p_e", {req("k", "degree"), req("wsy", "synapse width [m]"), opt("pe", "electronic planes", 1.0)}},
       [](const Params& p) { return Outputs{{"area", electronic_area(p.at("k"), Length{p.at("wsy")}, p.at("pe")).value(), "m^2"}}; }},
      {{"planes", "photonic and electronic planes for a wafer",
        {req("n", "neurons per wafer"), opt("L", "path length", 2.5), opt("wwg", "waveguide pitch [m]", 2e-6),
         opt("wsy", "synapse width [m]", 10e-6), opt("d", "wafer diameter [m]", 0.3), opt("fill", "fill factor", 1.0)}},
       [](const Params& p) {
         Wafer w;
         w.diameter = Length{p.at("d")};
         w.fill_factor = p.at("fill");
         const auto r = required_planes(p.at("n"), p.at("L"), Length{p.at("wwg")}, Length{p.at("wsy")}, w);
         return Outputs{{"degree", r.degree, "1"}, {"p_p", r.p_p, "1"}, {"p_e", r.p_e, "1"}};
       }},
      {{"eq4", "lifetime weight updates L·f/√N",
        {opt("lifetime", "lifetime [s]", 1e9), opt("rate", "mean spike rate [Hz]", 10e3), opt("fanin", "fan-in", 1000.0)}},
       [](const Params& p) {
         SystemAssumptions a;
         a.lifetime = Time{p.at("lifetime")};
         a.mean_rate = Frequency{p.at("rate")};
         a.fanin = p.at("fanin");
         return Outputs{{"updates", lifetime_updates(a), "1"}};
       }},
      {{"eq5", "largest update energy √N·E_opt", {opt("fanin", "fan-in", 1000.0), opt("eopt", "optical energy per spike [J]", 100e-15)}},
       [](const Params& p) {
         SystemAssumptions a;
         a.fanin = p.at("fanin");
         a.e_opt = Energy{p.at("eopt")};
         return Outputs{{"max_update_energy", max_update_energy(a).value(), "J"}};
       }},
  };
  return table;
}

std::string expected_params(const CalcFormula& f) {
  std::string s;
  for (const auto& p : f.params) {
    s += "\n  --" + p.name + " " + p.description;
    if (!p.required) s += " (default " + format_real(p.fallback) + ")";
  }
  return s;
}

}  // namespace

const std::vector<CalcFormula>& calc_formulas() {
  static const std::vector<CalcFormula> list = [] {
    std::vector<CalcFormula> out;
    for (const auto& e : entries()) out.push_back(e.formula);
    return out;
  }();
  return list;
}

CalcResult calc(std::string_view formula, const std::map<std::string, double>& params) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.formula.name == formula) entry = &e;
  }
  if (entry == nullptr) {
    std::string names;
    for (const auto& e : entries()) names += (names.empty() ? "" : ", ") + e.formula.name;
    throw UsageError("unknown formula '" + std::string(formula) + "' (available: " + names + ")");
  }
  Params resolved;
  std::vector<std::string> missing;
  for (const auto& p : entry->formula.params) {
    if (auto it = params.find(p.name); it != params.end()) {
      resolved[p.name] = it->second;
    } else if (p.required) {
      missing.push_back(p.name);
    } else {
      resolved[p.name] = p.fallback;
    }
  }
  std::vector<std::string> unknown;
  for (const auto& [k, _] : params) {
    if (!resolved.contains(k) && std::find(missing.begin(), missing.end(), k) == missing.end()) unknown.push_back(k);
  }
  if (!missing.empty() || !unknown.empty()) {
    std::string msg = "calc " + entry->formula.name + ":";
    for (const auto& m : missing) msg += " missing --" + m + ";";
    for (const auto& u : unknown) msg += " unknown --" + u + ";";
    throw UsageError(msg + " expected parameters:" + expected_params(entry->formula));
  }
  CalcResult r;
  r.formula = entry->formula.name;
  r.inputs = resolved;
  try {
    r.outputs = entry->eval(resolved);
  } catch (const DomainError& e) {
    throw UsageError("calc " + entry->formula.name + ": " + e.what());
  } catch (const InfeasibleError& e) {
    throw UsageError("calc " + entry->formula.name + ": " + e.what());
  }
  return r;
}

std::map<std::string, double> parse_calc_args(const std::vector<std::string>& args) {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string key = args[i];
    if (key.rfind("--", 0) != 0 || key.size() < 3) throw UsageError("expected --name value, got '" + key + "'");
    key = key.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw UsageError("parameter --" + key + " needs a value");
      value = args[++i];
    }
    try {
      out[key] = parse_real(value);
    } catch (const std::exception&) {
      throw UsageError("parameter --" + key + " value '" + value + "' is not a number");
    }
  }
  return out;
}

nlohmann::json CalcResult::to_json() const {
  nlohmann::json j;
  j["formula"] = formula;
  j["inputs"] = inputs;
  j["outputs"] = nlohmann::json::object();
  for (const auto& o : outputs) j["outputs"][o.name] = {{"value", o.value}, {"unit", o.unit}};
  return j;
}

std::string CalcResult::to_text() const {
  std::ostringstream os;
  for (const auto& o : outputs) {
    os << o.name << " = " << format_real(o.value);
    if (o.unit != "1") os << ' ' << o.unit;
    os << '\n';
  }
  return os.str();
}

double CalcResult::value(std::string_view output) const {
  for (const auto& o : outputs) {
    if (o.name == output) return o.value;
  }
  throw std::out_of_range("no output '" + std::string(output) + "'");
}

}  // namespace optonet
