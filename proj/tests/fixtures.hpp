#pragma once

// Designs shared by the test suites, built directly in SI.

#include "sfwm/model.hpp"
#include "sfwm/units.hpp"

namespace fixtures {

inline sfwm::Material silica() { return {"SiO2", 3.2e-20}; }
inline sfwm::Material chalcogenide() { return {"As2S3", 2.9e-18, 1e-14, 0.0, 0.0, true}; }
inline sfwm::Material diamond() { return {"Diamond", 5e-20}; }
inline sfwm::Material silicon() { return {"Si", 6e-18, 5e-12, 1.45e-21, 1e-9}; }

inline sfwm::PumpSpec cw(double wavelength, double power) {
  sfwm::PumpSpec p;
  p.mode = sfwm::PumpMode::CW;
  p.wavelength = wavelength;
  p.power = power;
  return p;
}

inline sfwm::PumpSpec pulsed(double wavelength, double power, double fwhm) {
  auto p = cw(wavelength, power);
  p.mode = sfwm::PumpMode::Pulsed;
  p.fwhm = fwhm;
  return p;
}

inline sfwm::Design fiber() {
  sfwm::ChannelGeometry c{300.0, 60e-12, 3e-27, 0.0022};
  return {silica(), c, pulsed(1555.95e-9, 0.1, 5e-12),
          sfwm::FilterSpec{128e9, 2.5e12}};
}

inline sfwm::Design waveguide() {
  sfwm::ChannelGeometry c{0.071, 0.86e-12, 0.0, 14.0};
  return {chalcogenide(), c, cw(1549.315e-9, 0.1), sfwm::FilterSpec{100e9, 6.3e12}};
}

inline sfwm::RingGeometry diamond_ring() {
  sfwm::RingGeometry r;
  r.circumference = 80.0 * sfwm::kPi * 1e-6;
  r.a_eff = 1e-12;
  r.q_factor = 5000;
  r.n_eff = 2.39;
  r.gamma = 0.20;
  return r;
}

inline sfwm::Design diamond_pulsed() {
  return {diamond(), diamond_ring(), pulsed(1550e-9, 1.0, 0.1e-12), std::nullopt};
}

inline sfwm::RingGeometry silicon_ring() {
  sfwm::RingGeometry r;
  r.circumference = 10.0 * sfwm::kPi * 1e-6;
  r.a_eff = 0.13e-12;
  r.q_factor = 7900;
  r.n_eff = 2.47;
  r.gamma = 190.0;
  return r;
}

inline sfwm::Design silicon_cw() {
  return {silicon(), silicon_ring(), cw(1558.5e-9, 0.01), std::nullopt};
}

}  // namespace fixtures
