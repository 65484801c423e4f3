#include "sfwm/cw_constants.hpp"

#include <algorithm>
#include <cmath>

#include "sfwm/jsa.hpp"
#include "sfwm/limit_powers.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/schmidt.hpp"
#include "sfwm/units.hpp"

namespace sfwm {
namespace {

// Reference design: gamma L = 1 so powers come out directly in (gamma L)^-1.
constexpr double kWavelength = 1550e-9;
constexpr double kLength = 1.0;
constexpr double kGamma = 1.0;
constexpr double kPower = 1.0;

PumpSpec long_pulse(double fwhm, PumpShapeKind shape) {
  PumpSpec p;
  p.mode = PumpMode::Pulsed;
  p.wavelength = kWavelength;
  p.power = kPower;
  p.fwhm = fwhm;
  p.shape.kind = shape;
  return p;
}

CwConstantCase evaluate(std::string name, double closed_form, double reference,
                        const ChannelGeometry& chan, const PumpSpec& pump, const GridSpec& grid,
                        const std::optional<FilterSpec>& filter, double target,
                        const CwConstantsOptions& opt) {
  const Material medium{"reference", 1.0};
  const auto jsa = build_jsa(medium, chan, pump, grid);
  const double n = n_pairs_full(jsa, pump, filter);
  const auto schmidt = schmidt_decompose(jsa);
  // sqrt(p1) |beta| is linear in P.
  const double metric = schmidt.largest_amp * std::sqrt(n);

  CwConstantCase c;
  c.name = std::move(name);
  c.closed_form = closed_form;
  c.reference = reference;
  c.numeric = kPower / metric * kGamma * kLength;
  c.rel_deviation = (c.numeric - reference) / reference;
  c.pass = std::abs(c.rel_deviation) <= opt.tolerance;
  c.schmidt_number = schmidt.schmidt_number;
  c.pump_to_target = pump_bandwidth(*pump.fwhm) / target;
  c.points = opt.points;
  return c;
}

}  // namespace

bool CwConstantsReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
}

CwConstantsReport verify_cw_constants(const CwConstantsOptions& opt) {
  const double a = sinc_half_root();
  const double omega_p = omega_from_wavelength(kWavelength);
  CwConstantsReport report;

  {
    // Dispersionless channel, passband disjoint from its conjugate.
    const ChannelGeometry chan{kLength, 1e-12, 0.0, kGamma};
    const double passband = 1e12;  // 2 pi B, rad/s
    const FilterSpec filter{passband / (2.0 * kPi), 2.0 * passband};
    const double fwhm = 4.0 * a * opt.bandwidth_ratio / passband;
    const auto pump = long_pulse(fwhm, opt.shape);
    const auto grid = GridSpec::passband_window(omega_p, filter, opt.points);
    report.cases.push_back(evaluate("filtered", cw_filtered_prefactor(), 0.58, chan, pump, grid,
                                    filter, passband, opt));
  }
  {
    // Unfiltered: signal half-axis from degeneracy outwards.
    const ChannelGeometry chan{kLength, 1e-12, 1e-26, kGamma};
    const double delta_m = phase_matching_bandwidth(chan.beta2, chan.length);
    const double fwhm = 4.0 * a * opt.bandwidth_ratio / delta_m;
    const auto pump = long_pulse(fwhm, opt.shape);
    const double half = 0.5 * opt.window_factor * delta_m;
    const auto grid = GridSpec::signal_idler(omega_p, omega_p + half, half, opt.points);
    report.cases.push_back(evaluate("unfiltered", cw_unfiltered_prefactor(), 0.75, chan, pump,
                                    grid, std::nullopt, delta_m, opt));
  }
  return report;
}

}  // namespace sfwm
