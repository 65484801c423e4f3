#pragma once

#include <complex>
#include <optional>

#include "sfwm/model.hpp"

namespace sfwm {

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);

/// Bisection for f(x) = 0 on a sign-changing bracket, to absolute tolerance tol.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol = 1e-12) {
  double flo = f(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Positive root a of sinc(x) = 1/2 (a ~ 1.8955).
double sinc_half_root();
/// Positive root s of sinc^2(x) = 1/2 (s ~ 1.3916).
double sincsq_half_root();

/// gamma = 2 pi n2 / (lambda A_eff), W^-1 m^-1.
double compute_gamma(const Material& material, double a_eff, double wavelength);

/// Delta_M ~ 4 sqrt(a / (|beta2| L)). Throws RegimeError for beta2 == 0.
double phase_matching_bandwidth(double beta2, double length);
/// Delta_P ~ 4a / T.
double pump_bandwidth(double fwhm);
/// Delta_R ~ omega_P / Q.
double resonance_bandwidth(double omega_p, double q_factor);

struct Bandwidths {
  std::optional<double> delta_m;
  std::optional<double> delta_p;
  std::optional<double> delta_r;
};

/// The applicable subset: Delta_M for dispersive channels, Delta_P for pulsed
/// pumps, Delta_R for rings.
Bandwidths bandwidths(const Structure& structure, const PumpSpec& pump);

double free_spectral_range(const RingGeometry& ring);

/// On-resonance |F(omega_P)|^2 = 4 v_g Q / (omega_P L).
double resonant_enhancement_sq(const RingGeometry& ring, double omega_p);

/// Coupling used by the general enhancement formula. Explicit overrides are
/// returned as given; otherwise the lossless convention kappa^2 + sigma^2 = 1
/// with sigma chosen so the Airy linewidth equals omega_P / Q exactly.
RingCoupling resolve_coupling(const RingGeometry& ring, double omega_p);

/// F(omega) = i kappa / (1 - sigma exp(i k(omega) L)), with the pump on
/// resonance and k(omega) linear in omega (slope 1/v_g).
std::complex<double> field_enhancement(double omega, const RingGeometry& ring, double omega_p);

/// Lorentzian approximation around the nearest resonance:
/// F0 / (1 - 2 i delta / Delta_R), F0 = 2 i sqrt(v_g Q / (omega_P L)).
std::complex<double> field_enhancement_lorentzian(double omega, const RingGeometry& ring,
                                                  double omega_p);

struct DerivedScales {
  double omega_p = 0.0;
  double gamma = 0.0;
  double length = 0.0;
  std::optional<double> l_nl;  ///< absent at zero pump power
  std::optional<double> l_d;   ///< pulsed, dispersive channels
  std::optional<double> delta_m;
  std::optional<double> delta_p;
  std::optional<double> delta_r;
  std::optional<double> f_res_sq;        ///< rings
  std::optional<double> group_velocity;  ///< rings

  double gamma_l() const { return gamma * length; }
  /// |F(omega_P)|^2 for rings, 1 for channels.
  double enhancement() const { return f_res_sq.value_or(1.0); }
};

/// gamma from the structure's override if present, else from the material.
double structure_gamma(const Material& material, const Structure& structure, double wavelength);

DerivedScales derive_scales(const Material& material, const Structure& structure,
                            const PumpSpec& pump);

inline DerivedScales derive_scales(const Design& d) {
  return derive_scales(d.material, d.structure, d.pump);
}

}  // namespace sfwm
