#pragma once

#include <string>
#include <vector>

#include "optonet/quantity.hpp"

namespace optonet {

/// Mean degree an Erdős–Rényi network of n_total nodes needs for mean path length L.
/// Throws DomainError when path_length <= 1/2 (pole) or n_total < 2.
double required_degree(double n_total, double path_length);

/// Mean shortest path of an Erdős–Rényi network with the given mean degree.
double achievable_path_length(double n_total, double degree);

/// Passive waveguide area per neuron, (k·w_wg/p_p)².
Area photonic_area(double degree, Length w_wg, double p_p);

/// Electronic synapse area per neuron, k·w_sy²/p_e.
Area electronic_area(double degree, Length w_sy, double p_e);

struct Wafer {
  Length diameter{0.3};
  double fill_factor = 1.0;

  [[nodiscard]] Area usable_area() const;
};

struct PlaneRequirement {
  double degree = 0.0;
  double p_p = 0.0;  // continuous; ceil at the reporting layer
  double p_e = 0.0;
};

/// Photonic and electronic plane counts that fit n_300 neurons on a wafer at the given path length.
PlaneRequirement required_planes(double n_300, double path_length, Length w_wg, Length w_sy,
                                 const Wafer& wafer = {});

enum class WidthAxis { synapse, waveguide };

struct PathLengthPoint {
  WidthAxis axis = WidthAxis::synapse;
  double n_300 = 0.0;
  double planes = 1.0;
  Length width{0.0};
  double max_degree = 0.0;
  double path_length = 0.0;  // NaN when infeasible
  bool feasible = false;     // max_degree > 1
};

/// Largest degree the wafer supports for a feature width, inverting the area relations.
double max_degree_for_width(WidthAxis axis, double n_300, double planes, Length width,
                            const Wafer& wafer = {});

/// Path length achievable over a (n_300 × planes × width) grid. Infeasible points are kept and flagged.
std::vector<PathLengthPoint> sweep_path_length_vs_width(WidthAxis axis,
                                                        const std::vector<double>& n_300_values,
                                                        const std::vector<double>& plane_values,
                                                        const std::vector<Length>& widths,
                                                        const Wafer& wafer = {});

std::string to_string(WidthAxis axis);

}  // namespace optonet
