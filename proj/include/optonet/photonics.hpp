#pragma once

#include "optonet/quantity.hpp"

namespace optonet {

/// Energy of one photon, h·c/λ. Throws DomainError for λ <= 0.
Energy photon_energy(Length wavelength);

/// Responsivity at unit quantum efficiency, q·λ/(h·c). Throws DomainError for λ <= 0.
Responsivity quantum_limited_responsivity(Length wavelength);

}  // namespace optonet
