#include "optonet/scaling.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "optonet/constants.hpp"
#include "optonet/error.hpp"

namespace optonet {

double required_degree(double n_total, double path_length) {
  if (!(path_length > 0.5)) throw DomainError("path length must exceed 1/2");
  if (!(n_total >= 2.0)) throw DomainError("network must have at least two nodes");
  return std::exp((std::log(n_total) - constants::euler_gamma) / (path_length - 0.5));
}

double achievable_path_length(double n_total, double degree) {
  if (!(degree > 1.0)) throw DomainError("degree must exceed 1");
  if (!(n_total >= 2.0)) throw DomainError("network must have at least two nodes");
  return 0.5 + (std::log(n_total) - constants::euler_gamma) / std::log(degree);
}

Area photonic_area(double degree, Length w_wg, double p_p) {
  if (degree < 0.0 || !(w_wg.value() > 0.0) || !(p_p > 0.0)) {
    throw DomainError("photonic_area requires non-negative degree and positive pitch and planes");
  }
  const Length side = degree * w_wg / p_p;
  return side * side;
}

Area electronic_area(double degree, Length w_sy, double p_e) {
  if (degree < 0.0 || !(w_sy.value() > 0.0) || !(p_e > 0.0)) {
    throw DomainError("electronic_area requires non-negative degree and positive width and planes");
  }
  return degree * w_sy * w_sy / p_e;
}

Area Wafer::usable_area() const {
  if (!(diameter.value() > 0.0)) throw DomainError("wafer diameter must be positive");
  if (!(fill_factor > 0.0 && fill_factor <= 1.0)) throw DomainError("fill factor must lie in (0, 1]");
  const Length r = diameter / 2.0;
  return std::numbers::pi * fill_factor * r * r;
}

PlaneRequirement required_planes(double n_300, double path_length, Length w_wg, Length w_sy,
                                 const Wafer& wafer) {
  if (!(n_300 > 0.0) || !(w_wg.value() > 0.0) || !(w_sy.value() > 0.0)) {
    throw DomainError("required_planes requires positive inputs");
  }
  PlaneRequirement r;
  r.degree = required_degree(n_300, path_length);
  const Area per_neuron = wafer.usable_area() / n_300;
  // A_p = (k·w_wg/p_p)² = A/N  and  A_e = k·w_sy²/p_e = A/N.
  r.p_p = (r.degree * w_wg / sqrt(per_neuron)).value();
  r.p_e = (r.degree * w_sy * w_sy / per_neuron).value();
  return r;
}

double max_degree_for_width(WidthAxis axis, double n_300, double planes, Length width,
                            const Wafer& wafer) {
  if (!(n_300 > 0.0) || !(planes > 0.0) || !(width.value() > 0.0)) {
    throw DomainError("max_degree_for_width requires positive inputs");
  }
  const Area per_neuron = wafer.usable_area() / n_300;
  switch (axis) {
    case WidthAxis::synapse:
      return (planes * per_neuron / (width * width)).value();
    case WidthAxis::waveguide:
      return (planes * sqrt(per_neuron) / width).value();
  }
  return 0.0;
}

std::vector<PathLengthPoint> sweep_path_length_vs_width(WidthAxis axis,
                                                        const std::vector<double>& n_300_values,
                                                        const std::vector<double>& plane_values,
                                                        const std::vector<Length>& widths,
                                                        const Wafer& wafer) {
  if (n_300_values.empty() || plane_values.empty() || widths.empty()) {
    throw DomainError("sweep grids must be non-empty");
  }
  std::vector<PathLengthPoint> out;
  out.reserve(n_300_values.size() * plane_values.size() * widths.size());
  for (double n : n_300_values) {
    for (double planes : plane_values) {
      for (Length w : widths) {
        PathLengthPoint p;
        p.axis = axis;
        p.n_300 = n;
        p.planes = planes;
        p.width = w;
        p.max_degree = max_degree_for_width(axis, n, planes, w, wafer);
        p.feasible = p.max_degree > 1.0;
        p.path_length = p.feasible ? achievable_path_length(n, p.max_degree)
                                   : std::numeric_limits<double>::quiet_NaN();
        out.push_back(p);
      }
    }
  }
  return out;
}

std::string to_string(WidthAxis axis) { return axis == WidthAxis::synapse ? "w_sy" : "w_wg"; }

}  // namespace optonet
