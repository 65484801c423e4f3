#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfwm/design_io.hpp"
#include "sfwm/jsa.hpp"
#include "sfwm/pair_rates.hpp"

namespace sfwm {

/// Grid used when a design does not specify one:
///  - filtered channel: the passband and its conjugate;
///  - unfiltered channel: symmetric grid reaching beta2 L Omega^2 / 2 ~ 1000;
///  - ring: one paired resonance one FSR away, +-4 Delta_R.
GridSpec default_grid(const Design& design, const OracleSpec& spec);

struct OracleComparison {
  std::optional<Regime> regime;            ///< absent in the intermediate ring band
  std::optional<double> closed_form;       ///< pairs per pulse
  double oracle = 0.0;                     ///< pairs per pulse
  std::optional<double> rel_deviation;     ///< (oracle - closed) / closed
  std::vector<ValidityCheck> validity;
  double tolerance = 0.0;
  /// Pass/fail only when a closed form applies and every validity check holds.
  std::optional<bool> verdict;
  double boundary_ratio = 0.0;
  int points = 0;
  std::string note;
};

/// Tolerance budget per structure: 5% for channels, 10% for rings.
double oracle_tolerance(const Structure& s);

OracleComparison compare_with_oracle(const Design& design, const OracleSpec& spec = {});

}  // namespace sfwm
