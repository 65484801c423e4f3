#include "sfwm/limit_powers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfwm/error.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

LimitPower LimitPower::unbounded() {
  return {Kind::Unbounded, std::numeric_limits<double>::infinity()};
}

LimitPower LimitPower::scaled(double factor) const {
  if (is_unbounded()) return *this;
  return {kind_, watts_ * factor};
}

std::string_view to_string(MultiPairVariant v) {
  switch (v) {
    case MultiPairVariant::ChannelFiltered: return "P_f^C";
    case MultiPairVariant::ChannelUnfiltered: return "P_u^C";
    case MultiPairVariant::ChannelFilteredCw: return "P_fCW^C";
    case MultiPairVariant::ChannelUnfilteredCw: return "P_uCW^C";
    case MultiPairVariant::RingShortPulse: return "P_S^R";
    case MultiPairVariant::RingLongPulse: return "P_L^R";
    case MultiPairVariant::RingCw: return "P_CW^R";
  }
  return "?";
}

double cw_filtered_prefactor() {
  const double s = sincsq_half_root();
  return std::pow(2.0 * std::log(2.0) * kPi * kPi / (64.0 * s * s), 0.25);
}

double cw_unfiltered_prefactor() {
  return std::pow(9.0 * kPi / (64.0 * sincsq_half_root()), 0.25);
}

double ring_cw_prefactor() {
  const double s = sincsq_half_root();
  return std::pow((std::sqrt(2.0) - 1.0) / (16.0 * s * s), 0.25);
}

LimitPower p_xpm(const DerivedScales& scales) {
  return LimitPower::finite(0.5 / scales.gamma_l() / scales.enhancement());
}

LimitPower p_spm(const DerivedScales& scales) { return p_xpm(scales).scaled(2.0); }

MultiPairLimit p_multi(const DerivedScales& scales, const Structure& structure,
                       const PumpSpec& pump, const std::optional<FilterSpec>& filter,
                       double regime_factor) {
  const double inv_gl = 1.0 / scales.gamma_l();

  if (const auto* ch = std::get_if<ChannelGeometry>(&structure)) {
    if (!pump.pulsed()) {
      if (filter) return {cw_filtered_prefactor() * inv_gl, MultiPairVariant::ChannelFilteredCw};
      return {cw_unfiltered_prefactor() * inv_gl, MultiPairVariant::ChannelUnfilteredCw};
    }
    const double t = *pump.fwhm;
    if (filter) {
      return {std::sqrt(1.0 / (t * filter->bandwidth)) * inv_gl, MultiPairVariant::ChannelFiltered};
    }
    if (ch->beta2 == 0.0) throw RegimeError("dispersionless channel: L_D undefined");
    const double l_d = t * t / std::abs(ch->beta2);
    return {std::pow(9.0 * kPi * ch->length / (2.0 * l_d), 0.25) * inv_gl,
            MultiPairVariant::ChannelUnfiltered};
  }

  const auto& ring = std::get<RingGeometry>(structure);
  const double f = std::sqrt(scales.enhancement());
  if (!pump.pulsed()) {
    return {ring_cw_prefactor() / std::pow(f, 3.5) * inv_gl, MultiPairVariant::RingCw};
  }
  const double t = *pump.fwhm;
  const double x = ring.circumference / (group_velocity(ring) * t);
  const double ratio = *scales.delta_p / *scales.delta_r;
  if (ratio >= regime_factor) {
    return {std::sqrt(2.0) * x * x * inv_gl, MultiPairVariant::RingShortPulse};
  }
  if (ratio <= 1.0 / regime_factor) {
    return {std::sqrt(2.0) * std::sqrt(x) / (f * f * f) * inv_gl, MultiPairVariant::RingLongPulse};
  }
  throw RegimeError(
      "intermediate pulse regime (Delta_P ~ Delta_R): no closed-form multi-pair limit; "
      "evaluate with the quadrature oracle");
}

double tpa_figure_of_merit(const Material& material, double wavelength) {
  const double k0 = 2.0 * kPi / wavelength;
  return material.beta_tpa / (2.0 * k0 * material.n2);
}

LimitPower p_tpa(const Material& material, const DerivedScales& scales, double wavelength) {
  if (material.beta_tpa <= 0.0) return LimitPower::unbounded();
  const double r = tpa_figure_of_merit(material, wavelength);
  const double watts = 1.0 / (2.0 * r) / scales.gamma_l() / scales.enhancement();
  return material.beta_tpa_is_upper_bound ? LimitPower::lower_bound(watts)
                                          : LimitPower::finite(watts);
}

LimitPower p_fca(const Material& material, const PumpSpec& pump, double a_eff,
                 const DerivedScales& scales) {
  if (material.sigma_fca <= 0.0 || material.beta_tpa <= 0.0 || !pump.fwhm) {
    return LimitPower::unbounded();
  }
  const double watts = 3.0 * kHbar * scales.omega_p * a_eff / (material.sigma_fca * *pump.fwhm);
  return LimitPower::finite(watts / scales.enhancement());
}

LimitPower p_cwfca(const Material& material, const PumpSpec& /*pump*/, double a_eff,
                   const DerivedScales& scales) {
  if (material.sigma_fca <= 0.0 || material.beta_tpa <= 0.0 || material.tau_c <= 0.0) {
    return LimitPower::unbounded();
  }
  const double watts = std::sqrt(4.0 * kHbar * scales.omega_p * a_eff * a_eff /
                                 (material.beta_tpa * material.tau_c * material.sigma_fca *
                                  scales.length));
  return LimitPower::finite(watts / scales.enhancement());
}

double steady_state_carrier_density(const Material& material, double power, double omega_p,
                                    double a_eff) {
  return material.beta_tpa * power * power * material.tau_c /
         (2.0 * kHbar * omega_p * a_eff * a_eff);
}

LimitReport classify(const Design& design, double margin, double regime_factor) {
  require_valid(design);
  if (!(margin > 0.0)) throw ValidationError("margin must be > 0");

  const auto scales = derive_scales(design);
  const double a_eff = structure_area(design.structure);

  LimitReport r;
  r.enhancement_applied = scales.enhancement();
  r.p_xpm = p_xpm(scales);
  r.p_spm = p_spm(scales);
  const auto multi = p_multi(scales, design.structure, design.pump, design.filter, regime_factor);
  r.p_multi = LimitPower::finite(multi.watts);
  r.multi_variant = multi.variant;
  r.p_tpa = p_tpa(design.material, scales, design.pump.wavelength);
  r.p_tpa_pump = r.p_tpa.scaled(2.0);

  r.ladder = {{"XPM", r.p_xpm}, {"SPM", r.p_spm}, {"multi-pair", r.p_multi}};
  if (!r.p_tpa.is_unbounded()) r.ladder.push_back({"TPA", r.p_tpa});

  if (design.pump.pulsed()) {
    r.p_fca = p_fca(design.material, design.pump, a_eff, scales);
    if (!r.p_fca->is_unbounded()) r.ladder.push_back({"FCA", *r.p_fca});
  } else {
    r.p_cwfca = p_cwfca(design.material, design.pump, a_eff, scales);
    if (!r.p_cwfca->is_unbounded()) r.ladder.push_back({"CWFCA", *r.p_cwfca});
    // Intracavity power for rings.
    const double p_in = design.pump.power * scales.enhancement();
    r.n_ss = steady_state_carrier_density(design.material, p_in, scales.omega_p, a_eff);
    r.n_tot = *r.n_ss * design.material.sigma_fca * scales.length / 2.0;
  }

  std::stable_sort(r.ladder.begin(), r.ladder.end(), [](const auto& a, const auto& b) {
    return a.power.watts() < b.power.watts();
  });
  r.binding = r.ladder.front().name;
  r.margin = margin;
  r.recommended_power = r.ladder.front().power.watts() / margin;
  return r;
}

std::vector<std::string> violated_constraints(const LimitReport& report, double power) {
  std::vector<std::string> out;
  for (const auto& e : report.ladder) {
    if (e.power.watts() < power) out.push_back(e.name);
  }
  return out;
}

}  // namespace sfwm
