#pragma once

#include "optonet/quantity.hpp"

namespace optonet::constants {

// CODATA 2018. h, c, q are exact by SI definition.
inline constexpr Action planck{6.62607015e-34};
inline constexpr Velocity speed_of_light{299792458.0};
inline constexpr Charge elementary_charge{1.602176634e-19};
inline constexpr MagneticFlux flux_quantum{6.62607015e-34 / (2.0 * 1.602176634e-19)};
inline constexpr Permeability vacuum_permeability{1.25663706212e-6};
inline constexpr double euler_gamma = 0.57721566490153286061;

}  // namespace optonet::constants
