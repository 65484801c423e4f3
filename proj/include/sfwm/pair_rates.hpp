#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfwm/model.hpp"
#include "sfwm/nl_params.hpp"

namespace sfwm {

enum class Regime { ChannelFiltered, ChannelUnfiltered, RingShortPulse, RingLongPulse };

std::string_view to_string(Regime r);

/// One "much less than" assumption of a closed form. margin is the ratio of
/// the large side to the small side; the check passes when margin >= factor.
struct ValidityCheck {
  std::string condition;
  double margin = 0.0;
  bool pass = false;
};

struct PairRateResult {
  double n_pairs = 0.0;  ///< expected pairs per pump pulse
  Regime regime = Regime::ChannelFiltered;
  std::vector<ValidityCheck> validity;

  bool in_regime() const;
};

inline constexpr double kDefaultRegimeFactor = 10.0;

/// Long-pulse, hard-edge filtered channel: (gamma P L)^2 T B sinc^2(beta2 Omega^2 L / 2).
/// Counts pairs with one photon in the filter and its partner in the conjugate filter.
PairRateResult n_pairs_channel_filtered(const DerivedScales& scales, const PumpSpec& pump,
                                        const ChannelGeometry& chan, const FilterSpec& filter,
                                        double regime_factor = kDefaultRegimeFactor);

/// Long-pulse channel integrated over the whole generation bandwidth:
/// (gamma P L)^2 (2/3) sqrt(T^2 / (2 pi |beta2| L)).
PairRateResult n_pairs_channel_unfiltered(const DerivedScales& scales, const PumpSpec& pump,
                                          const ChannelGeometry& chan,
                                          double regime_factor = kDefaultRegimeFactor);

/// Ring, short pulse (Delta_P >> Delta_R): (gamma P L)^2 (1/2) (T v_g / L)^4.
PairRateResult n_pairs_ring_short(const DerivedScales& scales, const PumpSpec& pump,
                                  const RingGeometry& ring,
                                  double regime_factor = kDefaultRegimeFactor);

/// Ring, long pulse (Delta_P << Delta_R): (gamma P L)^2 (v_g / 2L) |F(omega_P)|^6 T.
PairRateResult n_pairs_ring_long(const DerivedScales& scales, const PumpSpec& pump,
                                 const RingGeometry& ring,
                                 double regime_factor = kDefaultRegimeFactor);

/// Picks the closed form matching the design (filter present -> filtered
/// channel; ring -> short or long by Delta_P/Delta_R). Throws RegimeError for
/// CW pumps and for rings in the intermediate band.
PairRateResult n_pairs_closed_form(const Design& design, const DerivedScales& scales,
                                   double regime_factor = kDefaultRegimeFactor);

struct PairRateCw {
  double pairs_per_second = 0.0;
  Regime regime = Regime::ChannelFiltered;
};

/// CW limit of the long-pulse forms (N / T as T -> infinity), pairs per second.
PairRateCw cw_pair_rate(const Design& design, const DerivedScales& scales);

}  // namespace sfwm
