#pragma once

// Limiting pump powers: the pump power above which a given parasitic process
// (XPM, SPM, multi-pair emission, TPA, FCA) stops being negligible. Every
// limit is a static algebraic gate on the design, expressed in units of
// (gamma L)^-1 where possible. For rings, XPM/SPM/TPA/FCA limits are divided
// by the on-resonance power enhancement |F(omega_P)|^2; the multi-pair
// limits already carry F through their derivation and are not.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfwm/model.hpp"
#include "sfwm/nl_params.hpp"

namespace sfwm {

/// A limiting power in watts, or +infinity when the mechanism is absent.
/// LowerBound marks values derived from an upper-bound material constant.
class LimitPower {
 public:
  enum class Kind { Finite, Unbounded, LowerBound };

  static LimitPower finite(double watts) { return {Kind::Finite, watts}; }
  static LimitPower lower_bound(double watts) { return {Kind::LowerBound, watts}; }
  static LimitPower unbounded();

  Kind kind() const { return kind_; }
  bool is_unbounded() const { return kind_ == Kind::Unbounded; }
  /// Watts; +infinity when unbounded.
  double watts() const { return watts_; }

  LimitPower scaled(double factor) const;

 private:
  LimitPower(Kind k, double w) : kind_(k), watts_(w) {}
  Kind kind_;
  double watts_;
};

enum class MultiPairVariant {
  ChannelFiltered,      ///< P_f^C
  ChannelUnfiltered,    ///< P_u^C
  ChannelFilteredCw,    ///< P_fCW^C
  ChannelUnfilteredCw,  ///< P_uCW^C
  RingShortPulse,       ///< P_S^R
  RingLongPulse,        ///< P_L^R
  RingCw,               ///< P_CW^R
};

std::string_view to_string(MultiPairVariant v);

struct MultiPairLimit {
  double watts = 0.0;
  MultiPairVariant variant = MultiPairVariant::ChannelFiltered;
};

/// (2 ln2 pi^2 / 64 s^2)^(1/4) ~ 0.58
double cw_filtered_prefactor();
/// (9 pi / 64 s)^(1/4) ~ 0.75
double cw_unfiltered_prefactor();
/// ((sqrt2 - 1) / 16 s^2)^(1/4) ~ 0.34
double ring_cw_prefactor();

/// 0.5 (gamma L)^-1, divided by |F|^2 for rings.
LimitPower p_xpm(const DerivedScales& scales);
/// Twice P_XPM.
LimitPower p_spm(const DerivedScales& scales);

/// Multi-pair limit for the design's structure, pump mode and pulse regime.
/// A filter selects the filtered channel variants. Throws RegimeError for a
/// pulsed ring with Delta_P ~ Delta_R.
MultiPairLimit p_multi(const DerivedScales& scales, const Structure& structure,
                       const PumpSpec& pump, const std::optional<FilterSpec>& filter,
                       double regime_factor = 10.0);

/// Nonlinear figure of merit r = beta_TPA / (2 k0 n2).
double tpa_figure_of_merit(const Material& material, double wavelength);

/// Cross-TPA of the generated photons: (1 / 2r) (gamma L)^-1, divided by |F|^2
/// for rings. Unbounded when beta_TPA = 0.
LimitPower p_tpa(const Material& material, const DerivedScales& scales, double wavelength);

/// Pulsed FCA: 3 hbar omega_P A_eff / (sigma_FCA T), divided by |F|^2 for rings.
LimitPower p_fca(const Material& material, const PumpSpec& pump, double a_eff,
                 const DerivedScales& scales);

/// CW FCA: (4 hbar omega_P A_eff^2 / (beta_TPA tau_c sigma_FCA L))^(1/2),
/// divided by |F|^2 for rings.
LimitPower p_cwfca(const Material& material, const PumpSpec& pump, double a_eff,
                   const DerivedScales& scales);

/// Steady-state free-carrier density beta_TPA P^2 tau_c / (2 hbar omega_P A_eff^2), m^-3.
double steady_state_carrier_density(const Material& material, double power, double omega_p,
                                    double a_eff);

struct LimitEntry {
  std::string name;
  LimitPower power;
};

struct LimitReport {
  LimitPower p_xpm = LimitPower::unbounded();
  LimitPower p_spm = LimitPower::unbounded();
  LimitPower p_multi = LimitPower::unbounded();
  MultiPairVariant multi_variant = MultiPairVariant::ChannelFiltered;
  LimitPower p_tpa = LimitPower::unbounded();
  LimitPower p_tpa_pump = LimitPower::unbounded();  ///< 2 P_TPA
  std::optional<LimitPower> p_fca;                  ///< pulsed pumps
  std::optional<LimitPower> p_cwfca;                ///< CW pumps
  std::optional<double> n_ss;                       ///< CW, at the design power
  std::optional<double> n_tot;                      ///< CW, at the design power
  double enhancement_applied = 1.0;
  /// Finite limits sorted ascending (unbounded mechanisms are omitted).
  std::vector<LimitEntry> ladder;
  std::string binding;
  double margin = 1.0;
  double recommended_power = 0.0;  ///< binding limit / margin
};

/// Computes every applicable limit and identifies the binding (smallest) one.
LimitReport classify(const Design& design, double margin = 1.0, double regime_factor = 10.0);

/// Names of ladder entries whose limit lies below the given pump power.
std::vector<std::string> violated_constraints(const LimitReport& report, double power);

}  // namespace sfwm
