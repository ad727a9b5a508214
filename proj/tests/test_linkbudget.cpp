#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "optonet/error.hpp"
#include "optonet/linkbudget.hpp"

using namespace optonet;
using namespace optonet::literals;

namespace {

constexpr double h_ref = 6.62607015e-34;
constexpr double c_ref = 299792458.0;
constexpr double q_ref = 1.602176634e-19;

double photon_j(double lambda) { return h_ref * c_ref / lambda; }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(MissProbability, Examples) {
  EXPECT_DOUBLE_EQ(miss_probability(0.0, Probability{0.7}).value(), 1.0);
  EXPECT_NEAR(miss_probability(7.0, Probability{0.7}).value(), std::exp(-4.9), 1e-15);
  EXPECT_THROW(miss_probability(-1.0, Probability{0.7}), DomainError);
}

TEST(MissProbability, StrictlyDecreasingInBothArguments) {
  for (double n = 0.5; n < 20.0; n += 0.5) {
    for (double eta = 0.05; eta < 1.0; eta += 0.05) {
      const double p = miss_probability(n, Probability{eta}).value();
      EXPECT_LT(miss_probability(n + 0.25, Probability{eta}).value(), p);
      EXPECT_LT(miss_probability(n, Probability{eta + 0.01}).value(), p);
    }
  }
}

TEST(PhotonsForReliability, InversePair) {
  for (double p : {0.1, 0.5, 0.9, 0.99, 0.999, 0.999999}) {
    for (double eta : {0.05, 0.3, 0.7, 1.0}) {
      const double n = photons_for_reliability(Probability{p}, Probability{eta});
      EXPECT_LT(rel(miss_probability(n, Probability{eta}).value(), 1.0 - p), 1e-9) << p << ' ' << eta;
    }
  }
}

TEST(PhotonsForReliability, ExamplesAndErrors) {
  const double n = photons_for_reliability(Probability{0.99}, Probability{0.7});
  EXPECT_NEAR(n, -std::log(0.01) / 0.7, 1e-12);
  EXPECT_NEAR(n, 6.579, 1e-3);
  EXPECT_EQ(std::ceil(n), 7.0);
  EXPECT_DOUBLE_EQ(photons_for_reliability(Probability{0.0}, Probability{0.7}), 0.0);
  EXPECT_THROW(photons_for_reliability(Probability{1.0}, Probability{0.7}), InfeasibleError);
  EXPECT_THROW(photons_for_reliability(Probability{0.5}, Probability{0.0}), DomainError);
}

TEST(LinkSourceEnergy, SevenPhotonsAtOnePointFiveMicrons) {
  const double e = link_source_energy(7.0, 1.5_um, Probability{1.0}).value();
  EXPECT_NEAR(e, 7.0 * photon_j(1.5e-6), 1e-30);
  EXPECT_NEAR(e, 0.927e-18, 0.001e-18);
  EXPECT_NEAR(link_source_energy(7.0, 1.5_um, Probability{0.01}).value(), 92.7e-18, 0.01e-18);
  EXPECT_THROW(link_source_energy(7.0, 1.5_um, Probability{0.0}), DomainError);
}

TEST(SnspdReset, HalfLISquared) {
  EXPECT_NEAR(snspd_reset_energy(100.0_nH, 10.0_uA).value(), 5e-18, 1e-30);
  EXPECT_DOUBLE_EQ(snspd_reset_energy(Inductance{0.0}, 10.0_uA).value(), 0.0);
}

TEST(SnspdReset, InvariantUnderFourLHalfI) {
  for (double l = 1e-9; l < 1e-6; l *= 3.1) {
    for (double i = 1e-6; i < 1e-4; i *= 2.7) {
      const double a = snspd_reset_energy(Inductance{l}, Current{i}).value();
      const double b = snspd_reset_energy(Inductance{4.0 * l}, Current{i / 2.0}).value();
      EXPECT_LT(rel(b, a), 1e-12);
    }
  }
}

TEST(SnspdReceiver, DeadTimeIsLongerOfResetAndCountRate) {
  SnspdReceiver rx;
  EXPECT_NEAR(rx.dead_time().value(), 50e-9, 1e-20);
  rx.reset_time = 80.0_ns;
  EXPECT_NEAR(rx.dead_time().value(), 80e-9, 1e-20);
  rx.max_count_rate = 1.0_GHz;
  rx.reset_time = Time{0.0};
  EXPECT_NEAR(rx.dead_time().value(), 1e-9, 1e-20);
}

TEST(Receiverless, QuantumLimitedEnergyAndPhotons) {
  ReceiverlessPhotodiode pd;  // 1 fF, 0.8 V, quantum-limited responsivity
  const double r = q_ref * 1.5e-6 / (h_ref * c_ref);
  const double e = receiverless_optical_energy(pd, Probability{1.0}, 1.5_um).value();
  EXPECT_NEAR(e, 1e-15 * 0.8 / r, 1e-27);
  EXPECT_NEAR(e, 0.662e-15, 0.001e-15);
  const double photons = receiverless_photon_count(pd, 1.5_um);
  EXPECT_NEAR(photons, 1e-15 * 0.8 / q_ref, 1e-6);  // C·V/q
  EXPECT_NEAR(photons, 4993.0, 1.0);
}

TEST(Receiverless, RequiresResponsivityWithoutWavelength) {
  ReceiverlessPhotodiode pd;
  EXPECT_THROW(receiverless_optical_energy(pd, Probability{1.0}), DomainError);
  pd.responsivity = Responsivity{1.0};
  EXPECT_NEAR(receiverless_optical_energy(pd, Probability{0.5}).value(), 1.6e-15, 1e-27);
}

TEST(Receiverless, StaticPowerAndDominanceFrequency) {
  ReceiverlessPhotodiode pd;
  EXPECT_NEAR(photodiode_static_power(pd).value(), 1e-9, 1e-21);
  OpticalLink link;
  link.receiver = pd;
  link.eta = Probability{0.01};
  const double r = q_ref * 1.5e-6 / (h_ref * c_ref);
  const double dynamic = 1e-15 * 0.8 / r / 0.01;  // ≈ 66.2 fJ
  const double f = static_dominance_frequency(pd, link).value();
  EXPECT_NEAR(f, 1e-9 / dynamic, 1e-6);
  EXPECT_NEAR(f, 15.1e3, 0.1e3);

  auto doubled = pd;
  doubled.i_leak = Current{2e-9};
  EXPECT_NEAR(static_dominance_frequency(doubled, link).value(), 2.0 * f, 1e-6);
  auto none = pd;
  none.i_leak = Current{0.0};
  EXPECT_DOUBLE_EQ(static_dominance_frequency(none, link).value(), 0.0);
}

TEST(TransmitterPower, Examples) {
  EXPECT_NEAR(transmitter_power(1000.0, 0.662_fJ, 1.0_MHz, Probability{1.0}).value(), 0.662e-6, 1e-15);
  EXPECT_NEAR(transmitter_power(1000.0, 0.662_fJ, 1.0_GHz, Probability{1.0}).value(), 0.662e-3, 1e-12);
  EXPECT_DOUBLE_EQ(transmitter_power(0.0, 0.662_fJ, 1.0_GHz, Probability{1.0}).value(), 0.0);
  EXPECT_THROW(transmitter_power(10.0, 0.662_fJ, 1.0_GHz, Probability{0.0}), DomainError);
}

TEST(ReceiverEnergies, ScaleAsInverseEta) {
  ReceiverlessPhotodiode pd;
  std::vector<double> xs, ys_sc, ys_pd;
  for (int i = 0; i <= 8; ++i) {
    const double eta = std::pow(10.0, -i * 0.5);
    xs.push_back(std::log10(eta));
    ys_sc.push_back(std::log10(link_source_energy(7.0, 1.5_um, Probability{eta}).value()));
    ys_pd.push_back(std::log10(receiverless_optical_energy(pd, Probability{eta}, 1.5_um).value()));
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    EXPECT_NEAR((ys_sc[i] - ys_sc[i - 1]) / (xs[i] - xs[i - 1]), -1.0, 1e-9);
    EXPECT_NEAR((ys_pd[i] - ys_pd[i - 1]) / (xs[i] - xs[i - 1]), -1.0, 1e-9);
  }
}

TEST(ReceiverEnergies, SuperconductingAboutThousandTimesCheaper) {
  const double n = photons_for_reliability(Probability{0.99}, Probability{0.7});
  for (double eta : {1.0, 0.1, 0.01, 1e-3}) {
    const double sc = link_source_energy(n, 1.5_um, Probability{eta}).value();
    const double pd = receiverless_optical_energy(ReceiverlessPhotodiode{}, Probability{eta}, 1.5_um).value();
    const double ratio = pd / sc;
    EXPECT_GE(ratio, 300.0);
    EXPECT_LE(ratio, 3000.0);
  }
}

TEST(OpticalLink, ValidateAndSourceEnergy) {
  OpticalLink link;
  EXPECT_NO_THROW(link.validate());
  EXPECT_NEAR(link.source_energy().value(), 7.0 * photon_j(1.5e-6) / 0.01, 1e-28);
  link.n_ph = -1.0;
  EXPECT_THROW(link.validate(), DomainError);
  link.n_ph = 7.0;
  link.eta = Probability{0.0};
  EXPECT_THROW(link.validate(), DomainError);
  link.eta = Probability{0.5};
  link.receiver = ReceiverlessPhotodiode{Capacitance{0.0}};
  EXPECT_THROW(link.validate(), DomainError);
}
