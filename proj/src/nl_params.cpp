#include "sfwm/nl_params.hpp"

#include <cmath>

#include "sfwm/error.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double sinc_half_root() {
  static const double root = bisect([](double x) { return sinc(x) - 0.5; }, 1.0, 3.0, 1e-13);
  return root;
}

double sincsq_half_root() {
  static const double root =
      bisect([](double x) { return sinc(x) * sinc(x) - 0.5; }, 0.5, 2.0, 1e-13);
  return root;
}

double compute_gamma(const Material& material, double a_eff, double wavelength) {
  return 2.0 * kPi * material.n2 / (wavelength * a_eff);
}

double phase_matching_bandwidth(double beta2, double length) {
  if (beta2 == 0.0) throw RegimeError("dispersionless channel: phase-matching bandwidth undefined");
  return 4.0 * std::sqrt(sinc_half_root() / (std::abs(beta2) * length));
}

double pump_bandwidth(double fwhm) { return 4.0 * sinc_half_root() / fwhm; }

double resonance_bandwidth(double omega_p, double q_factor) { return omega_p / q_factor; }

Bandwidths bandwidths(const Structure& structure, const PumpSpec& pump) {
  Bandwidths b;
  if (pump.pulsed() && pump.fwhm) b.delta_p = pump_bandwidth(*pump.fwhm);
  if (const auto* ch = std::get_if<ChannelGeometry>(&structure)) {
    if (ch->beta2 != 0.0) b.delta_m = phase_matching_bandwidth(ch->beta2, ch->length);
  } else {
    b.delta_r = resonance_bandwidth(pump.omega(), std::get<RingGeometry>(structure).q_factor);
  }
  return b;
}

double free_spectral_range(const RingGeometry& ring) {
  return 2.0 * kPi * group_velocity(ring) / ring.circumference;
}

double resonant_enhancement_sq(const RingGeometry& ring, double omega_p) {
  return 4.0 * group_velocity(ring) * ring.q_factor / (omega_p * ring.circumference);
}

RingCoupling resolve_coupling(const RingGeometry& ring, double omega_p) {
  if (ring.coupling) {
    if (ring.coupling->sigma >= 1.0) throw ValidationError("nonphysical coupling: sigma >= 1");
    return *ring.coupling;
  }
  // Half-power round-trip phase for FWHM omega_P/Q.
  const double theta = omega_p * ring.circumference / (2.0 * group_velocity(ring) * ring.q_factor);
  // |1 - sigma e^{i theta}|^2 = 2 (1 - sigma)^2  =>  sigma^2 - 2 sigma (2 - cos theta) + 1 = 0.
  const double b = 2.0 - std::cos(theta);
  const double sigma = b - std::sqrt(b * b - 1.0);
  return {std::sqrt(1.0 - sigma * sigma), sigma};
}

std::complex<double> field_enhancement(double omega, const RingGeometry& ring, double omega_p) {
  const auto c = resolve_coupling(ring, omega_p);
  const double theta = (omega - omega_p) * ring.circumference / group_velocity(ring);
  const std::complex<double> i{0.0, 1.0};
  return i * c.kappa / (1.0 - c.sigma * std::exp(i * theta));
}

std::complex<double> field_enhancement_lorentzian(double omega, const RingGeometry& ring,
                                                  double omega_p) {
  const double fsr = free_spectral_range(ring);
  const double delta = std::remainder(omega - omega_p, fsr);
  const double dr = resonance_bandwidth(omega_p, ring.q_factor);
  const std::complex<double> f0{0.0, std::sqrt(resonant_enhancement_sq(ring, omega_p))};
  return f0 / std::complex<double>(1.0, -2.0 * delta / dr);
}

double structure_gamma(const Material& material, const Structure& structure, double wavelength) {
  return std::visit(
      [&](const auto& g) {
        return g.gamma ? *g.gamma : compute_gamma(material, g.a_eff, wavelength);
      },
      structure);
}

DerivedScales derive_scales(const Material& material, const Structure& structure,
                            const PumpSpec& pump) {
  DerivedScales s;
  s.omega_p = pump.omega();
  s.gamma = structure_gamma(material, structure, pump.wavelength);
  s.length = structure_length(structure);
  if (pump.power > 0.0) s.l_nl = 1.0 / (s.gamma * pump.power);

  const auto bw = bandwidths(structure, pump);
  s.delta_m = bw.delta_m;
  s.delta_p = bw.delta_p;
  s.delta_r = bw.delta_r;

  if (const auto* ch = std::get_if<ChannelGeometry>(&structure)) {
    if (pump.pulsed() && ch->beta2 != 0.0) s.l_d = (*pump.fwhm) * (*pump.fwhm) / std::abs(ch->beta2);
  } else {
    const auto& ring = std::get<RingGeometry>(structure);
    s.group_velocity = group_velocity(ring);
    if (ring.coupling) {
      const auto c = resolve_coupling(ring, s.omega_p);
      s.f_res_sq = c.kappa * c.kappa / ((1.0 - c.sigma) * (1.0 - c.sigma));
    } else {
      s.f_res_sq = resonant_enhancement_sq(ring, s.omega_p);
    }
  }
  return s;
}

}  // namespace sfwm
