#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <ostream>

namespace optonet {

/// SI dimension exponents: mass, length, time, current, temperature.
template <int M, int L, int T, int I, int K>
struct Dim {
  static constexpr int mass = M;
  static constexpr int length = L;
  static constexpr int time = T;
  static constexpr int current = I;
  static constexpr int temperature = K;
};

template <typename A, typename B>
using DimProduct = Dim<A::mass + B::mass, A::length + B::length, A::time + B::time,
                       A::current + B::current, A::temperature + B::temperature>;

template <typename A, typename B>
using DimQuotient = Dim<A::mass - B::mass, A::length - B::length, A::time - B::time,
                        A::current - B::current, A::temperature - B::temperature>;

/// A physical scalar stored in SI base units. The dimension is part of the
/// type, so mismatched addition or comparison does not compile and
/// multiplication/division compose dimensions.
template <typename D>
class Quantity {
 public:
  using dimension = D;

  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value_(v) {}

  [[nodiscard]] constexpr double value() const { return value_; }

  constexpr Quantity& operator+=(Quantity o) {
    value_ += o.value_;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity o) {
    value_ -= o.value_;
    return *this;
  }
  constexpr Quantity& operator*=(double s) {
    value_ *= s;
    return *this;
  }
  constexpr Quantity& operator/=(double s) {
    value_ /= s;
    return *this;
  }

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity{a.value_ + b.value_}; }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity{a.value_ - b.value_}; }
  friend constexpr Quantity operator-(Quantity a) { return Quantity{-a.value_}; }
  friend constexpr Quantity operator*(Quantity a, double s) { return Quantity{a.value_ * s}; }
  friend constexpr Quantity operator*(double s, Quantity a) { return Quantity{a.value_ * s}; }
  friend constexpr Quantity operator/(Quantity a, double s) { return Quantity{a.value_ / s}; }

  friend constexpr auto operator<=>(Quantity a, Quantity b) { return a.value_ <=> b.value_; }
  friend constexpr bool operator==(Quantity a, Quantity b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

template <typename A, typename B>
constexpr Quantity<DimProduct<A, B>> operator*(Quantity<A> a, Quantity<B> b) {
  return Quantity<DimProduct<A, B>>{a.value() * b.value()};
}

template <typename A, typename B>
constexpr Quantity<DimQuotient<A, B>> operator/(Quantity<A> a, Quantity<B> b) {
  return Quantity<DimQuotient<A, B>>{a.value() / b.value()};
}

template <typename D>
constexpr Quantity<DimQuotient<Dim<0, 0, 0, 0, 0>, D>> operator/(double s, Quantity<D> q) {
  return Quantity<DimQuotient<Dim<0, 0, 0, 0, 0>, D>>{s / q.value()};
}

template <typename D>
  requires(D::mass % 2 == 0 && D::length % 2 == 0 && D::time % 2 == 0 && D::current % 2 == 0 &&
           D::temperature % 2 == 0)
Quantity<Dim<D::mass / 2, D::length / 2, D::time / 2, D::current / 2, D::temperature / 2>> sqrt(
    Quantity<D> q) {
  return Quantity<Dim<D::mass / 2, D::length / 2, D::time / 2, D::current / 2, D::temperature / 2>>{
      std::sqrt(q.value())};
}

template <typename D>
std::ostream& operator<<(std::ostream& os, Quantity<D> q) {
  return os << q.value();
}

using Scalar = Quantity<Dim<0, 0, 0, 0, 0>>;
using Length = Quantity<Dim<0, 1, 0, 0, 0>>;
using Area = Quantity<Dim<0, 2, 0, 0, 0>>;
using Time = Quantity<Dim<0, 0, 1, 0, 0>>;
using Frequency = Quantity<Dim<0, 0, -1, 0, 0>>;
using Current = Quantity<Dim<0, 0, 0, 1, 0>>;
using Temperature = Quantity<Dim<0, 0, 0, 0, 1>>;
using Energy = Quantity<Dim<1, 2, -2, 0, 0>>;
using Power = Quantity<Dim<1, 2, -3, 0, 0>>;
using Charge = Quantity<Dim<0, 0, 1, 1, 0>>;
using Voltage = Quantity<Dim<1, 2, -3, -1, 0>>;
using Capacitance = Quantity<Dim<-1, -2, 4, 2, 0>>;
using Inductance = Quantity<Dim<1, 2, -2, -2, 0>>;
using Resistance = Quantity<Dim<1, 2, -3, -2, 0>>;
using MagneticFlux = Quantity<Dim<1, 2, -2, -1, 0>>;
using Permeability = Quantity<Dim<1, 1, -2, -2, 0>>;
using Action = Quantity<Dim<1, 2, -1, 0, 0>>;
using Velocity = Quantity<Dim<0, 1, -1, 0, 0>>;
using Responsivity = Quantity<Dim<-1, -2, 3, 1, 0>>;
using PowerDensity = Quantity<Dim<1, 0, -3, 0, 0>>;
using ArealCapacitance = Quantity<Dim<-1, -4, 4, 2, 0>>;
// Squares are dimensionless, so per-square sheet quantities share the bulk dimension.
using InductancePerSquare = Inductance;
using SheetResistance = Resistance;

/// Probability in [0, 1]; construction outside the range throws DomainError.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double p);

  [[nodiscard]] constexpr double value() const { return p_; }
  [[nodiscard]] Probability complement() const { return Probability{1.0 - p_}; }

  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  double p_ = 0.0;
};

namespace literals {

// clang-format off
constexpr Length operator""_m(long double v) { return Length{static_cast<double>(v)}; }
constexpr Length operator""_mm(long double v) { return Length{static_cast<double>(v) * 1e-3}; }
constexpr Length operator""_um(long double v) { return Length{static_cast<double>(v) * 1e-6}; }
constexpr Length operator""_nm(long double v) { return Length{static_cast<double>(v) * 1e-9}; }
constexpr Energy operator""_J(long double v) { return Energy{static_cast<double>(v)}; }
constexpr Energy operator""_pJ(long double v) { return Energy{static_cast<double>(v) * 1e-12}; }
constexpr Energy operator""_fJ(long double v) { return Energy{static_cast<double>(v) * 1e-15}; }
constexpr Energy operator""_aJ(long double v) { return Energy{static_cast<double>(v) * 1e-18}; }
constexpr Power operator""_W(long double v) { return Power{static_cast<double>(v)}; }
constexpr Power operator""_MW(long double v) { return Power{static_cast<double>(v) * 1e6}; }
constexpr Power operator""_mW(long double v) { return Power{static_cast<double>(v) * 1e-3}; }
constexpr Power operator""_uW(long double v) { return Power{static_cast<double>(v) * 1e-6}; }
constexpr Power operator""_nW(long double v) { return Power{static_cast<double>(v) * 1e-9}; }
constexpr Current operator""_A(long double v) { return Current{static_cast<double>(v)}; }
constexpr Current operator""_uA(long double v) { return Current{static_cast<double>(v) * 1e-6}; }
constexpr Current operator""_nA(long double v) { return Current{static_cast<double>(v) * 1e-9}; }
constexpr Current operator""_fA(long double v) { return Current{static_cast<double>(v) * 1e-15}; }
constexpr Voltage operator""_V(long double v) { return Voltage{static_cast<double>(v)}; }
constexpr Voltage operator""_mV(long double v) { return Voltage{static_cast<double>(v) * 1e-3}; }
constexpr Capacitance operator""_pF(long double v) { return Capacitance{static_cast<double>(v) * 1e-12}; }
constexpr Capacitance operator""_fF(long double v) { return Capacitance{static_cast<double>(v) * 1e-15}; }
constexpr Inductance operator""_uH(long double v) { return Inductance{static_cast<double>(v) * 1e-6}; }
constexpr Inductance operator""_nH(long double v) { return Inductance{static_cast<double>(v) * 1e-9}; }
constexpr Inductance operator""_pH(long double v) { return Inductance{static_cast<double>(v) * 1e-12}; }
constexpr Resistance operator""_ohm(long double v) { return Resistance{static_cast<double>(v)}; }
constexpr Temperature operator""_K(long double v) { return Temperature{static_cast<double>(v)}; }
constexpr Frequency operator""_Hz(long double v) { return Frequency{static_cast<double>(v)}; }
constexpr Frequency operator""_kHz(long double v) { return Frequency{static_cast<double>(v) * 1e3}; }
constexpr Frequency operator""_MHz(long double v) { return Frequency{static_cast<double>(v) * 1e6}; }
constexpr Frequency operator""_GHz(long double v) { return Frequency{static_cast<double>(v) * 1e9}; }
constexpr Time operator""_s(long double v) { return Time{static_cast<double>(v)}; }
constexpr Time operator""_ms(long double v) { return Time{static_cast<double>(v) * 1e-3}; }
constexpr Time operator""_us(long double v) { return Time{static_cast<double>(v) * 1e-6}; }
constexpr Time operator""_ns(long double v) { return Time{static_cast<double>(v) * 1e-9}; }
// clang-format on

}  // namespace literals

}  // namespace optonet
