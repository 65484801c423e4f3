#include "sfwm/pair_rates.hpp"

#include <cmath>
#include <limits>

#include "sfwm/error.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::ChannelFiltered: return "channel-filtered";
    case Regime::ChannelUnfiltered: return "channel-unfiltered";
    case Regime::RingShortPulse: return "ring-short-pulse";
    case Regime::RingLongPulse: return "ring-long-pulse";
  }
  return "?";
}

bool PairRateResult::in_regime() const {
  for (const auto& c : validity) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

ValidityCheck make_check(std::string condition, double margin, double factor) {
  return {std::move(condition), margin, margin >= factor};
}

double require_pulse(const PumpSpec& pump, std::string_view what) {
  if (!pump.pulsed() || !pump.fwhm) {
    throw RegimeError(std::string(what) + " needs a pulsed pump; use the CW limiting powers");
  }
  return *pump.fwhm;
}

double gpl_squared(const DerivedScales& s, const PumpSpec& pump) {
  const double gpl = s.gamma * pump.power * s.length;
  return gpl * gpl;
}

}  // namespace

PairRateResult n_pairs_channel_filtered(const DerivedScales& scales, const PumpSpec& pump,
                                        const ChannelGeometry& chan, const FilterSpec& filter,
                                        double regime_factor) {
  const double t = require_pulse(pump, "filtered channel rate");
  const double x = chan.beta2 * filter.detuning * filter.detuning * chan.length / 2.0;
  const double sc = sinc(x);

  PairRateResult r;
  r.regime = Regime::ChannelFiltered;
  r.n_pairs = gpl_squared(scales, pump) * t * filter.bandwidth * sc * sc;
  const double margin = scales.delta_m ? *scales.delta_m / *scales.delta_p
                                       : std::numeric_limits<double>::infinity();
  r.validity.push_back(make_check("Delta_P << Delta_M", margin, regime_factor));
  // Long-pulse limit: the pump line is narrow on the scale of the passband.
  r.validity.push_back(
      make_check("Delta_P << 2 pi B", 2.0 * kPi * filter.bandwidth / *scales.delta_p, regime_factor));
  return r;
}

PairRateResult n_pairs_channel_unfiltered(const DerivedScales& scales, const PumpSpec& pump,
                                          const ChannelGeometry& chan, double regime_factor) {
  const double t = require_pulse(pump, "unfiltered channel rate");
  if (chan.beta2 == 0.0) throw RegimeError("dispersionless channel: L_D undefined");
  const double l = chan.length;

  PairRateResult r;
  r.regime = Regime::ChannelUnfiltered;
  r.n_pairs = gpl_squared(scales, pump) * (2.0 / 3.0) *
              std::sqrt(t * t / (2.0 * kPi * std::abs(chan.beta2) * l));
  const double l_d = t * t / std::abs(chan.beta2);
  r.validity.push_back(make_check("L << L_D/a", l_d / (sinc_half_root() * l), regime_factor));
  return r;
}

PairRateResult n_pairs_ring_short(const DerivedScales& scales, const PumpSpec& pump,
                                  const RingGeometry& ring, double regime_factor) {
  const double t = require_pulse(pump, "short-pulse ring rate");
  const double vg = group_velocity(ring);
  const double x = t * vg / ring.circumference;

  PairRateResult r;
  r.regime = Regime::RingShortPulse;
  r.n_pairs = gpl_squared(scales, pump) * 0.5 * x * x * x * x;
  const double dr = resonance_bandwidth(scales.omega_p, ring.q_factor);
  r.validity.push_back(make_check("Delta_P >> Delta_R", pump_bandwidth(t) / dr, regime_factor));
  return r;
}

PairRateResult n_pairs_ring_long(const DerivedScales& scales, const PumpSpec& pump,
                                 const RingGeometry& ring, double regime_factor) {
  const double t = require_pulse(pump, "long-pulse ring rate");
  if (!scales.f_res_sq) throw ValidationError("long-pulse ring rate needs the resonance Q");
  const double f2 = *scales.f_res_sq;
  const double vg = group_velocity(ring);
  const double l = ring.circumference;

  PairRateResult r;
  r.regime = Regime::RingLongPulse;
  r.n_pairs = gpl_squared(scales, pump) * vg / (2.0 * l) * f2 * f2 * f2 * t;
  const double threshold = sinc_half_root() * l * f2 / vg;
  r.validity.push_back(make_check("T >> a L |F|^2 / v_g", t / threshold, regime_factor));
  return r;
}

PairRateResult n_pairs_closed_form(const Design& design, const DerivedScales& scales,
                                   double regime_factor) {
  if (const auto* ch = std::get_if<ChannelGeometry>(&design.structure)) {
    if (design.filter) {
      return n_pairs_channel_filtered(scales, design.pump, *ch, *design.filter, regime_factor);
    }
    return n_pairs_channel_unfiltered(scales, design.pump, *ch, regime_factor);
  }
  const auto& ring = std::get<RingGeometry>(design.structure);
  require_pulse(design.pump, "ring rate");
  const double ratio = *scales.delta_p / *scales.delta_r;
  if (ratio >= regime_factor) return n_pairs_ring_short(scales, design.pump, ring, regime_factor);
  if (ratio <= 1.0 / regime_factor) {
    return n_pairs_ring_long(scales, design.pump, ring, regime_factor);
  }
  throw RegimeError("intermediate pulse regime (Delta_P ~ Delta_R): no closed form, use the oracle");
}

PairRateCw cw_pair_rate(const Design& design, const DerivedScales& scales) {
  const double g = scales.gamma * design.pump.power * scales.length;
  if (const auto* ch = std::get_if<ChannelGeometry>(&design.structure)) {
    if (design.filter) {
      const double sc = sinc(ch->beta2 * design.filter->detuning * design.filter->detuning *
                             ch->length / 2.0);
      return {g * g * design.filter->bandwidth * sc * sc, Regime::ChannelFiltered};
    }
    if (ch->beta2 == 0.0) throw RegimeError("dispersionless channel: unfiltered rate undefined");
    return {g * g * (2.0 / 3.0) / std::sqrt(2.0 * kPi * std::abs(ch->beta2) * ch->length),
            Regime::ChannelUnfiltered};
  }
  const auto& ring = std::get<RingGeometry>(design.structure);
  const double f2 = *scales.f_res_sq;
  return {g * g * group_velocity(ring) / (2.0 * ring.circumference) * f2 * f2 * f2,
          Regime::RingLongPulse};
}

}  // namespace sfwm
