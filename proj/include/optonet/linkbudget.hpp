#pragma once

#include <variant>

#include "optonet/quantity.hpp"

namespace optonet {

/// Superconducting nanowire single-photon detector at a synapse.
struct SnspdReceiver {
  Probability eta_d{0.7};
  Inductance l_spd{100e-9};
  Current i_spd{10e-6};
  Time reset_time{0.0};
  Frequency max_count_rate{20e6};

  /// Non-paralyzable dead time: the longer of reset_time and 1/max_count_rate.
  [[nodiscard]] Time dead_time() const;
  void validate() const;
};

/// Photodiode driving a CMOS gate directly, without a transimpedance amplifier.
struct ReceiverlessPhotodiode {
  Capacitance c_tot{1e-15};
  Voltage v_swing{0.8};
  Responsivity responsivity{0.0};  // zero means quantum-limited at the link wavelength
  Current i_leak{1e-9};
  Voltage v_bias{1.0};

  void validate() const;
};

using ReceiverModel = std::variant<SnspdReceiver, ReceiverlessPhotodiode>;

/// One optical connection: transmitter, waveguide losses, and receiver.
struct OpticalLink {
  Length wavelength{1.5e-6};
  Probability eta{0.01};
  double n_ph = 7.0;  // mean photons arriving at the receiver per spike
  ReceiverModel receiver = SnspdReceiver{};

  void validate() const;

  /// Responsivity actually used for a photodiode receiver (quantum-limited when unset).
  [[nodiscard]] Responsivity effective_responsivity() const;
  /// Source energy per spike for this link, n_ph·hν/η.
  [[nodiscard]] Energy source_energy() const;
};

/// Probability that a pulse of mean n_ph photons produces no detection, exp(-n_ph·η_D).
Probability miss_probability(double n_ph, Probability eta_d);

/// Mean photons needed at the receiver for detection probability p_detect.
/// Real-valued; callers choose whether to ceil. Throws InfeasibleError for p_detect = 1.
double photons_for_reliability(Probability p_detect, Probability eta_d);

/// Total optical energy the source must emit per spike, N_ph·hν/η.
Energy link_source_energy(double n_ph, Length wavelength, Probability eta);

/// Electrical energy to reset the nanowire after a detection, ½·L·I².
Energy snspd_reset_energy(Inductance l_spd, Current i_spd);

/// Optical energy to swing a receiverless photodiode node, C·V/(η·R).
Energy receiverless_optical_energy(const ReceiverlessPhotodiode& pd, Probability eta);
/// Same, with R defaulting to quantum-limited at the given wavelength when unset.
Energy receiverless_optical_energy(const ReceiverlessPhotodiode& pd, Probability eta,
                                   Length wavelength);
/// Photons delivered to the receiver by the energy above (η cancels).
double receiverless_photon_count(const ReceiverlessPhotodiode& pd, Length wavelength);

/// Static dissipation from photodiode leakage, V_bias·I_leak.
Power photodiode_static_power(const ReceiverlessPhotodiode& pd);

/// Spike rate below which leakage dominates the per-synapse dynamic optical energy.
Frequency static_dominance_frequency(const ReceiverlessPhotodiode& pd, const OpticalLink& link);

/// Optical power a neuron's transmitter must emit to drive its fan-out at a spike rate.
Power transmitter_power(double fanout, Energy per_synapse_receiver_energy, Frequency spike_rate,
                        Probability eta);

}  // namespace optonet
