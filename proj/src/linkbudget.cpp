#include "optonet/linkbudget.hpp"

#include <cmath>
#include <limits>

#include "optonet/error.hpp"
#include "optonet/photonics.hpp"

namespace optonet {

namespace {

void require_positive_eta(Probability eta) {
  if (!(eta.value() > 0.0)) throw DomainError("link efficiency must be positive");
}

}  // namespace

Time SnspdReceiver::dead_time() const {
  const Time rate_limited = 1.0 / max_count_rate;
  return reset_time > rate_limited ? reset_time : rate_limited;
}

void SnspdReceiver::validate() const {
  if (!(eta_d.value() > 0.0)) throw DomainError("SNSPD detection efficiency must be positive");
  if (!(l_spd.value() > 0.0)) throw DomainError("SNSPD inductance must be positive");
  if (!(i_spd.value() > 0.0)) throw DomainError("SNSPD bias current must be positive");
  if (!(reset_time.value() >= 0.0)) throw DomainError("SNSPD reset time must be non-negative");
  if (!(max_count_rate.value() > 0.0)) throw DomainError("SNSPD max count rate must be positive");
}

void ReceiverlessPhotodiode::validate() const {
  if (!(c_tot.value() > 0.0)) throw DomainError("photodiode capacitance must be positive");
  if (!(v_swing.value() > 0.0)) throw DomainError("photodiode voltage swing must be positive");
  if (!(responsivity.value() >= 0.0)) throw DomainError("photodiode responsivity must be positive");
  if (!(i_leak.value() >= 0.0)) throw DomainError("photodiode leakage must be non-negative");
  if (!(v_bias.value() > 0.0)) throw DomainError("photodiode bias must be positive");
}

void OpticalLink::validate() const {
  if (!(wavelength.value() > 0.0)) throw DomainError("wavelength must be positive");
  require_positive_eta(eta);
  if (!(n_ph >= 0.0) || !std::isfinite(n_ph)) throw DomainError("photon count must be non-negative");
  std::visit([](const auto& rx) { rx.validate(); }, receiver);
}

Responsivity OpticalLink::effective_responsivity() const {
  if (const auto* pd = std::get_if<ReceiverlessPhotodiode>(&receiver);
      pd != nullptr && pd->responsivity.value() > 0.0) {
    return pd->responsivity;
  }
  return quantum_limited_responsivity(wavelength);
}

Energy OpticalLink::source_energy() const { return link_source_energy(n_ph, wavelength, eta); }

Probability miss_probability(double n_ph, Probability eta_d) {
  if (!(n_ph >= 0.0)) throw DomainError("photon count must be non-negative");
  return Probability{std::exp(-n_ph * eta_d.value())};
}

double photons_for_reliability(Probability p_detect, Probability eta_d) {
  if (p_detect.value() >= 1.0) {
    throw InfeasibleError("certain detection requires infinitely many photons");
  }
  if (!(eta_d.value() > 0.0)) throw DomainError("detection efficiency must be positive");
  return -std::log1p(-p_detect.value()) / eta_d.value();
}

Energy link_source_energy(double n_ph, Length wavelength, Probability eta) {
  require_positive_eta(eta);
  if (!(n_ph >= 0.0)) throw DomainError("photon count must be non-negative");
  return n_ph * photon_energy(wavelength) / eta.value();
}

Energy snspd_reset_energy(Inductance l_spd, Current i_spd) {
  if (l_spd.value() < 0.0) throw DomainError("inductance must be non-negative");
  return 0.5 * l_spd * i_spd * i_spd;
}

Energy receiverless_optical_energy(const ReceiverlessPhotodiode& pd, Probability eta) {
  require_positive_eta(eta);
  if (!(pd.responsivity.value() > 0.0)) {
    throw DomainError("responsivity must be set (or supply a wavelength)");
  }
  return pd.c_tot * pd.v_swing / pd.responsivity / eta.value();
}

Energy receiverless_optical_energy(const ReceiverlessPhotodiode& pd, Probability eta,
                                   Length wavelength) {
  ReceiverlessPhotodiode resolved = pd;
  if (!(resolved.responsivity.value() > 0.0)) {
    resolved.responsivity = quantum_limited_responsivity(wavelength);
  }
  return receiverless_optical_energy(resolved, eta);
}

double receiverless_photon_count(const ReceiverlessPhotodiode& pd, Length wavelength) {
  const Energy at_receiver = receiverless_optical_energy(pd, Probability{1.0}, wavelength);
  return (at_receiver / photon_energy(wavelength)).value();
}

Power photodiode_static_power(const ReceiverlessPhotodiode& pd) { return pd.v_bias * pd.i_leak; }

Frequency static_dominance_frequency(const ReceiverlessPhotodiode& pd, const OpticalLink& link) {
  const Energy dynamic = receiverless_optical_energy(pd, link.eta, link.wavelength);
  if (!(dynamic.value() > 0.0)) {
    throw InfeasibleError("zero dynamic energy: static power dominates at every rate");
  }
  return photodiode_static_power(pd) / dynamic;
}

Power transmitter_power(double fanout, Energy per_synapse_receiver_energy, Frequency spike_rate,
                        Probability eta) {
  require_positive_eta(eta);
  return fanout * per_synapse_receiver_energy * spike_rate / eta.value();
}

}  // namespace optonet
