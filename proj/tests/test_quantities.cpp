#include <gtest/gtest.h>

#include <cmath>
#include <type_traits>

#include "optonet/constants.hpp"
#include "optonet/error.hpp"
#include "optonet/photonics.hpp"
#include "optonet/quantity.hpp"

using namespace optonet;
using namespace optonet::literals;

namespace {

// Independent reference values, typed in rather than taken from the library.
constexpr double h_ref = 6.62607015e-34;
constexpr double c_ref = 299792458.0;
constexpr double q_ref = 1.602176634e-19;

template <typename A, typename B>
concept Addable = requires(A a, B b) { a + b; };

template <typename A, typename B>
concept Comparable = requires(A a, B b) { a < b; };

template <typename Q>
concept HasSqrt = requires(Q q) { optonet::sqrt(q); };

}  // namespace

TEST(Dimensions, MismatchedAdditionDoesNotCompile) {
  static_assert(Addable<Length, Length>);
  static_assert(!Addable<Length, Time>);
  static_assert(!Addable<Energy, Power>);
  static_assert(!Addable<Current, Voltage>);
  static_assert(!Comparable<Energy, Time>);
  static_assert(Comparable<Energy, Energy>);
}

TEST(Dimensions, ProductsComposeDimensions) {
  static_assert(std::is_same_v<decltype(Power{} * Time{}), Energy>);
  static_assert(std::is_same_v<decltype(Energy{} / Time{}), Power>);
  static_assert(std::is_same_v<decltype(Voltage{} * Current{}), Power>);
  static_assert(std::is_same_v<decltype(Capacitance{} * Voltage{}), Charge>);
  static_assert(std::is_same_v<decltype(Inductance{} * Current{}), MagneticFlux>);
  static_assert(std::is_same_v<decltype(Inductance{} / Resistance{}), Time>);
  static_assert(std::is_same_v<decltype(Charge{} / Energy{}), Responsivity>);
  static_assert(std::is_same_v<decltype(1.0 / Time{}), Frequency>);
  static_assert(std::is_same_v<decltype(Power{} / Area{}), PowerDensity>);
  static_assert(std::is_same_v<decltype(Length{} * Length{}), Area>);
}

TEST(Dimensions, SqrtOnlyForEvenExponents) {
  static_assert(HasSqrt<Area>);
  static_assert(!HasSqrt<Length>);
  static_assert(!HasSqrt<Energy>);
  static_assert(std::is_same_v<decltype(optonet::sqrt(Area{})), Length>);
  EXPECT_DOUBLE_EQ(optonet::sqrt(Area{4e-12}).value(), 2e-6);
}

TEST(Dimensions, LiteralsScaleToSi) {
  EXPECT_DOUBLE_EQ((1.5_um).value(), 1.5e-6);
  EXPECT_DOUBLE_EQ((100.0_nH).value(), 100e-9);
  EXPECT_DOUBLE_EQ((10.0_uA).value(), 10e-6);
  EXPECT_DOUBLE_EQ((1.0_fF).value(), 1e-15);
  EXPECT_DOUBLE_EQ((160.0_pH).value(), 160e-12);
  EXPECT_DOUBLE_EQ((0.927_aJ).value(), 0.927e-18);
  EXPECT_DOUBLE_EQ((10.0_MW).value(), 1e7);
  EXPECT_DOUBLE_EQ((20.0_MHz).value(), 2e7);
}

TEST(Dimensions, ArithmeticAndOrdering) {
  const Energy a = 2.0_aJ;
  const Energy b = 3.0_aJ;
  EXPECT_LT(a, b);
  EXPECT_DOUBLE_EQ((a + b).value(), 5e-18);
  EXPECT_DOUBLE_EQ((b - a).value(), 1e-18);
  EXPECT_DOUBLE_EQ((2.0 * a).value(), 4e-18);
  EXPECT_DOUBLE_EQ((a / b).value(), 2.0 / 3.0);
}

TEST(Constants, MatchCodata2018) {
  EXPECT_EQ(constants::planck.value(), h_ref);
  EXPECT_EQ(constants::speed_of_light.value(), c_ref);
  EXPECT_EQ(constants::elementary_charge.value(), q_ref);
  EXPECT_DOUBLE_EQ(constants::flux_quantum.value(), h_ref / (2.0 * q_ref));
  EXPECT_NEAR(constants::vacuum_permeability.value(), 1.25663706212e-6, 1e-16);
}

TEST(Probability, RejectsOutOfRange) {
  EXPECT_NO_THROW(Probability{0.0});
  EXPECT_NO_THROW(Probability{1.0});
  EXPECT_THROW(Probability{-1e-12}, DomainError);
  EXPECT_THROW(Probability{1.0 + 1e-12}, DomainError);
  EXPECT_THROW(Probability{std::nan("")}, DomainError);
  EXPECT_DOUBLE_EQ(Probability{0.3}.complement().value(), 0.7);
}

TEST(Photonics, PhotonEnergyAgainstReference) {
  for (double lambda : {0.4e-6, 0.85e-6, 1.31e-6, 1.5e-6, 1.55e-6, 10e-6}) {
    EXPECT_NEAR(photon_energy(Length{lambda}).value(), h_ref * c_ref / lambda, 1e-30) << lambda;
  }
  // 1.5 µm photon ≈ 0.8266 eV.
  EXPECT_NEAR(photon_energy(1.5_um).value() / q_ref, 0.82656, 1e-4);
}

TEST(Photonics, ResponsivityTimesPhotonEnergyIsCharge) {
  for (double lambda = 0.3e-6; lambda < 20e-6; lambda *= 1.37) {
    const Length l{lambda};
    const Charge product = quantum_limited_responsivity(l) * photon_energy(l);
    EXPECT_NEAR(product.value() / q_ref, 1.0, 1e-12) << lambda;
  }
  EXPECT_NEAR(quantum_limited_responsivity(1.5_um).value(), 1.20983, 1e-5);
}

TEST(Photonics, NonPositiveWavelengthThrows) {
  EXPECT_THROW(photon_energy(Length{0.0}), DomainError);
  EXPECT_THROW(photon_energy(Length{-1e-6}), DomainError);
  EXPECT_THROW(quantum_limited_responsivity(Length{0.0}), DomainError);
}
