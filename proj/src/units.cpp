#include "sfwm/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "sfwm/error.hpp"

namespace sfwm::units {
namespace {

struct UnitEntry {
  std::string_view symbol;
  double scale;
  Dimension dimension;
};

constexpr std::array kUnits{
    UnitEntry{"", 1.0, Dimension::Dimensionless},
    // length
    UnitEntry{"m", 1.0, Dimension::Length},
    UnitEntry{"km", 1e3, Dimension::Length},
    UnitEntry{"cm", 1e-2, Dimension::Length},
    UnitEntry{"mm", mm, Dimension::Length},
    UnitEntry{"um", um, Dimension::Length},
    UnitEntry{"µm", um, Dimension::Length},
    UnitEntry{"nm", nm, Dimension::Length},
    // time
    UnitEntry{"s", 1.0, Dimension::Time},
    UnitEntry{"ns", ns, Dimension::Time},
    UnitEntry{"ps", ps, Dimension::Time},
    UnitEntry{"fs", fs, Dimension::Time},
    // area
    UnitEntry{"m^2", 1.0, Dimension::Area},
    UnitEntry{"m2", 1.0, Dimension::Area},
    UnitEntry{"um^2", um2, Dimension::Area},
    UnitEntry{"um2", um2, Dimension::Area},
    UnitEntry{"µm²", um2, Dimension::Area},
    UnitEntry{"µm^2", um2, Dimension::Area},
    // power
    UnitEntry{"W", 1.0, Dimension::Power},
    UnitEntry{"mW", mW, Dimension::Power},
    UnitEntry{"uW", 1e-6, Dimension::Power},
    UnitEntry{"kW", 1e3, Dimension::Power},
    // frequency
    UnitEntry{"Hz", 1.0, Dimension::Frequency},
    UnitEntry{"kHz", 1e3, Dimension::Frequency},
    UnitEntry{"MHz", 1e6, Dimension::Frequency},
    UnitEntry{"GHz", GHz, Dimension::Frequency},
    UnitEntry{"THz", THz, Dimension::Frequency},
    UnitEntry{"rad/s", 1.0, Dimension::AngularFrequency},
    // dispersion
    UnitEntry{"s^2/m", 1.0, Dimension::Dispersion},
    UnitEntry{"fs^2/mm", fs2_per_mm, Dimension::Dispersion},
    UnitEntry{"ps^2/km", ps2_per_km, Dimension::Dispersion},
    UnitEntry{"ps^2/m", 1e-24, Dimension::Dispersion},
    // material constants
    UnitEntry{"m^2/W", 1.0, Dimension::NonlinearIndex},
    UnitEntry{"m/W", 1.0, Dimension::TpaCoefficient},
    UnitEntry{"cm/GW", 1e-2 / 1e9, Dimension::TpaCoefficient},
    UnitEntry{"1/(W m)", 1.0, Dimension::Gamma},
    UnitEntry{"1/W/m", 1.0, Dimension::Gamma},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

const UnitEntry& lookup(std::string_view unit) {
  unit = trim(unit);
  for (const auto& entry : kUnits) {
    if (entry.symbol == unit) return entry;
  }
  throw ValidationError("unknown unit '" + std::string(unit) + "'");
}

}  // namespace

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Any: return "any";
    case Dimension::Dimensionless: return "dimensionless";
    case Dimension::Length: return "length";
    case Dimension::Time: return "time";
    case Dimension::Area: return "area";
    case Dimension::Power: return "power";
    case Dimension::Frequency: return "frequency";
    case Dimension::AngularFrequency: return "angular frequency";
    case Dimension::Dispersion: return "dispersion";
    case Dimension::NonlinearIndex: return "nonlinear index";
    case Dimension::TpaCoefficient: return "TPA coefficient";
    case Dimension::Gamma: return "nonlinear parameter";
  }
  return "?";
}

double factor(std::string_view unit) { return lookup(unit).scale; }

double to_si(double value, std::string_view unit) { return value * factor(unit); }

double from_si(double value, std::string_view unit) { return value / factor(unit); }

double parse_quantity(std::string_view text, Dimension expected) {
  text = trim(text);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) {
    throw ValidationError("cannot parse quantity '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ValidationError("non-finite quantity '" + std::string(text) + "'");
  }
  const std::string_view unit(ptr, static_cast<std::size_t>(last - ptr));
  const auto& entry = lookup(unit);
  // Bare numbers are SI in whatever dimension is expected.
  if (expected != Dimension::Any && !trim(unit).empty() && entry.dimension != expected) {
    throw ValidationError("'" + std::string(text) + "' is not a " + std::string(to_string(expected)));
  }
  return value * entry.scale;
}

}  // namespace sfwm::units
