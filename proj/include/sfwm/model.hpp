#pragma once

// Domain types shared by every module. All quantities are SI
// (m, s, W, rad/s, Hz for filter bandwidths); display units are handled by
// units.hpp at the ingestion/report boundary only.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sfwm {

/// Optical constants of a nonlinear medium in the pump band.
struct Material {
  std::string name;
  double n2 = 0.0;         ///< nonlinear index, m^2/W
  double beta_tpa = 0.0;   ///< two-photon absorption coefficient, m/W
  double sigma_fca = 0.0;  ///< free-carrier absorption cross-section, m^2
  double tau_c = 0.0;      ///< free-carrier lifetime, s
  /// beta_tpa is only known as an upper bound ("< 0.01e-12 m/W"); TPA limits
  /// derived from it are then lower bounds.
  bool beta_tpa_is_upper_bound = false;
};

struct ChannelGeometry {
  double length = 0.0;  ///< m
  double a_eff = 0.0;   ///< m^2
  double beta2 = 0.0;   ///< s^2/m, signed; 0 means dispersionless/unspecified
  /// Nonlinear parameter quoted directly by a source, W^-1 m^-1. Overrides
  /// the value computed from n2 and a_eff.
  std::optional<double> gamma;
};

struct RingCoupling {
  double kappa = 0.0;  ///< cross-coupling amplitude
  double sigma = 0.0;  ///< self-coupling amplitude
};

struct RingGeometry {
  double circumference = 0.0;  ///< L = 2 pi R, m
  double a_eff = 0.0;          ///< m^2
  double q_factor = 0.0;       ///< loaded Q
  double n_eff = 0.0;          ///< v_g = c / n_eff unless group_index is set
  std::optional<double> group_index;
  std::optional<RingCoupling> coupling;
  std::optional<double> gamma;
};

using Structure = std::variant<ChannelGeometry, RingGeometry>;

enum class PumpMode { CW, Pulsed };

enum class PumpShapeKind { Gaussian, Sech, FlatTop, Custom };

/// Spectral pump waveform phi_P. Custom shapes are spectral amplitude samples
/// (offset from omega_P in rad/s, amplitude), linearly interpolated and zero
/// outside the sampled range; overall scale is irrelevant.
struct PumpShape {
  PumpShapeKind kind = PumpShapeKind::Gaussian;
  std::vector<std::pair<double, double>> samples;
};

struct PumpSpec {
  PumpMode mode = PumpMode::CW;
  double wavelength = 0.0;  ///< vacuum wavelength, m
  /// W. For pulsed pumps this is the pulse energy divided by the intensity
  /// FWHM, i.e. hbar*omega_P*N_pump/T; the average power is P*f*T.
  double power = 0.0;
  std::optional<double> fwhm;      ///< intensity FWHM T, s (pulsed)
  std::optional<double> rep_rate;  ///< f, Hz (pulsed)
  PumpShape shape;

  bool pulsed() const { return mode == PumpMode::Pulsed; }
  double omega() const;
  double average_power() const;
};

/// Hard-edge filter: angular passband 2*pi*B centred at omega_P + detuning,
/// paired with the conjugate passband at omega_P - detuning.
struct FilterSpec {
  double bandwidth = 0.0;  ///< B, Hz
  double detuning = 0.0;   ///< Omega, rad/s
};

struct Design {
  Material material;
  Structure structure;
  PumpSpec pump;
  std::optional<FilterSpec> filter;
};

double group_velocity(const RingGeometry& ring);

inline bool is_ring(const Structure& s) { return std::holds_alternative<RingGeometry>(s); }
double structure_length(const Structure& s);
double structure_area(const Structure& s);

struct ValidationResult {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  double omega_p = 0.0;
  std::optional<double> group_velocity;  ///< rings only

  bool ok() const { return violations.empty(); }
  bool has_warning(std::string_view needle) const;
};

/// Checks every type invariant and flags regime warnings. Never clamps.
ValidationResult validate_design(const Material& material, const Structure& structure,
                                 const PumpSpec& pump,
                                 const std::optional<FilterSpec>& filter = std::nullopt,
                                 double regime_factor = 10.0);

inline ValidationResult validate_design(const Design& d, double regime_factor = 10.0) {
  return validate_design(d.material, d.structure, d.pump, d.filter, regime_factor);
}

/// validate_design, throwing ValidationError listing every violation.
void require_valid(const Design& d);

}  // namespace sfwm
