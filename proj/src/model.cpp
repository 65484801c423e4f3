#include "sfwm/model.hpp"

#include <cmath>

#include "sfwm/error.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

double PumpSpec::omega() const { return omega_from_wavelength(wavelength); }

double PumpSpec::average_power() const {
  if (!pulsed()) return power;
  return power * rep_rate.value_or(0.0) * fwhm.value_or(0.0);
}

double group_velocity(const RingGeometry& ring) {
  return kSpeedOfLight / ring.group_index.value_or(ring.n_eff);
}

double structure_length(const Structure& s) {
  return std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, RingGeometry>) {
          return g.circumference;
        } else {
          return g.length;
        }
      },
      s);
}

double structure_area(const Structure& s) {
  return std::visit([](const auto& g) { return g.a_eff; }, s);
}

bool ValidationResult::has_warning(std::string_view needle) const {
  for (const auto& w : warnings) {
    if (w.find(needle) != std::string::npos) return true;
  }
  return false;
}

namespace {

void check(std::vector<std::string>& out, bool condition, const char* message) {
  if (!condition) out.emplace_back(message);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

ValidationResult validate_design(const Material& material, const Structure& structure,
                                 const PumpSpec& pump, const std::optional<FilterSpec>& filter,
                                 double regime_factor) {
  ValidationResult r;
  auto& v = r.violations;

  check(v, finite_positive(material.n2), "n2 > 0");
  check(v, material.beta_tpa >= 0.0, "beta_tpa >= 0");
  check(v, material.sigma_fca >= 0.0, "sigma_fca >= 0");
  check(v, material.tau_c >= 0.0, "tau_c >= 0");

  if (const auto* ch = std::get_if<ChannelGeometry>(&structure)) {
    check(v, finite_positive(ch->length), "length > 0");
    check(v, finite_positive(ch->a_eff), "a_eff > 0");
    check(v, std::isfinite(ch->beta2), "beta2 finite");
    if (ch->gamma) check(v, finite_positive(*ch->gamma), "gamma > 0");
  } else {
    const auto& ring = std::get<RingGeometry>(structure);
    check(v, finite_positive(ring.circumference), "circumference > 0");
    check(v, finite_positive(ring.a_eff), "a_eff > 0");
    check(v, std::isfinite(ring.q_factor) && ring.q_factor > 1.0, "q_factor > 1");
    check(v, finite_positive(ring.group_index.value_or(ring.n_eff)), "n_eff > 0");
    if (ring.gamma) check(v, finite_positive(*ring.gamma), "gamma > 0");
    if (ring.coupling) {
      const auto& c = *ring.coupling;
      check(v, c.sigma > 0.0 && c.sigma < 1.0, "0 < sigma < 1");
      check(v, c.kappa * c.kappa + c.sigma * c.sigma <= 1.0 + 1e-12, "kappa^2 + sigma^2 <= 1");
    }
  }

  check(v, finite_positive(pump.wavelength), "wavelength > 0");
  check(v, std::isfinite(pump.power) && pump.power >= 0.0, "power >= 0");
  if (pump.pulsed()) {
    check(v, pump.fwhm && finite_positive(*pump.fwhm), "fwhm > 0");
    if (pump.rep_rate) {
      check(v, finite_positive(*pump.rep_rate), "rep_rate > 0");
      if (pump.fwhm) check(v, *pump.rep_rate * *pump.fwhm <= 1.0, "duty cycle f*T <= 1");
    }
  }
  if (pump.shape.kind == PumpShapeKind::Custom) {
    check(v, pump.shape.samples.size() >= 2, "custom pump shape needs >= 2 samples");
  }

  if (filter) {
    check(v, finite_positive(filter->bandwidth), "filter bandwidth > 0");
    check(v, std::isfinite(filter->detuning), "filter detuning finite");
  }

  if (!r.ok()) return r;

  r.omega_p = pump.omega();
  if (const auto* ring = std::get_if<RingGeometry>(&structure)) {
    r.group_velocity = group_velocity(*ring);
    if (pump.pulsed()) {
      const double dp = pump_bandwidth(*pump.fwhm);
      const double dr = resonance_bandwidth(r.omega_p, ring->q_factor);
      const double ratio = dp / dr;
      if (ratio < regime_factor && ratio > 1.0 / regime_factor) {
        r.warnings.emplace_back(
            "intermediate pulse regime: pump bandwidth comparable to resonance bandwidth; "
            "neither short- nor long-pulse closed form applies");
      }
    }
  } else if (pump.pulsed()) {
    const auto& ch = std::get<ChannelGeometry>(structure);
    if (ch.beta2 != 0.0) {
      const double dm = phase_matching_bandwidth(ch.beta2, ch.length);
      const double dp = pump_bandwidth(*pump.fwhm);
      if (dp * regime_factor > dm) {
        r.warnings.emplace_back("pump bandwidth not small against phase-matching bandwidth");
      }
    }
  }
  return r;
}

void require_valid(const Design& d) {
  const auto r = validate_design(d);
  if (r.ok()) return;
  std::string msg = "invalid design:";
  for (const auto& violation : r.violations) msg += " [" + violation + "]";
  throw ValidationError(msg);
}

}  // namespace sfwm
