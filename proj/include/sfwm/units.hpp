#pragma once

#include <numbers>
#include <string>
#include <string_view>

namespace sfwm {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double kSpeedOfLight = 299'792'458.0;      // m/s
inline constexpr double kHbar = 1.054'571'817e-34;           // J s
inline constexpr double kPi = std::numbers::pi;

/// Angular pump frequency from vacuum wavelength.
constexpr double omega_from_wavelength(double wavelength) {
  return 2.0 * kPi * kSpeedOfLight / wavelength;
}

constexpr double wavelength_from_omega(double omega) {
  return 2.0 * kPi * kSpeedOfLight / omega;
}

namespace units {

// Display-unit scale factors: value_in_si = value_in_unit * factor.
inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double ps = 1e-12;
inline constexpr double fs = 1e-15;
inline constexpr double ns = 1e-9;
inline constexpr double um2 = 1e-12;
inline constexpr double GHz = 1e9;
inline constexpr double THz = 1e12;
inline constexpr double mW = 1e-3;
inline constexpr double fs2_per_mm = 1e-30 / 1e-3;
inline constexpr double ps2_per_km = 1e-24 / 1e3;

enum class Dimension {
  Any,
  Dimensionless,
  Length,
  Time,
  Area,
  Power,
  Frequency,         ///< Hz
  AngularFrequency,  ///< rad/s
  Dispersion,
  NonlinearIndex,
  TpaCoefficient,
  Gamma,
};

std::string_view to_string(Dimension d);

/// Scale factor for a unit symbol ("nm", "ps", "um^2", "fs^2/mm", ...).
/// Throws ValidationError for unknown symbols.
double factor(std::string_view unit);

double to_si(double value, std::string_view unit);
double from_si(double value, std::string_view unit);

/// Parses "1558.5 nm", "0.13 um^2", "5e-12 m/W" or a bare number (taken as SI).
/// A unit of another dimension than `expected` is a ValidationError.
double parse_quantity(std::string_view text, Dimension expected = Dimension::Any);

}  // namespace units
}  // namespace sfwm
