#include <string>

#include "optonet/constants.hpp"
#include "optonet/error.hpp"
#include "optonet/photonics.hpp"
#include "optonet/quantity.hpp"

namespace optonet {

Probability::Probability(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
  }
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

Energy photon_energy(Length wavelength) {
  if (!(wavelength.value() > 0.0)) throw DomainError("wavelength must be positive");
  return constants::planck * constants::speed_of_light / wavelength;
}

Responsivity quantum_limited_responsivity(Length wavelength) {
  if (!(wavelength.value() > 0.0)) throw DomainError("wavelength must be positive");
  return constants::elementary_charge / photon_energy(wavelength);
}

}  // namespace optonet
