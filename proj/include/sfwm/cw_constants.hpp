#pragma once

#include <string>
#include <vector>

#include "sfwm/model.hpp"

namespace sfwm {

/// Numerical estimate of a CW multi-pair prefactor: the pump power, in units
/// of (gamma L)^-1, at which sqrt(p1) |beta| reaches 1, with |beta|^2 the
/// expected pair number and sqrt(p1) the largest Schmidt amplitude.
struct CwConstantCase {
  std::string name;
  double closed_form = 0.0;  ///< printed closed-form prefactor
  double reference = 0.0;    ///< quoted rounded value
  double numeric = 0.0;
  double rel_deviation = 0.0;  ///< numeric vs reference
  bool pass = false;
  double schmidt_number = 0.0;
  double pump_to_target = 0.0;  ///< Delta_P / target bandwidth actually used
  int points = 0;
};

struct CwConstantsOptions {
  int points = 512;
  /// Delta_P = target bandwidth / bandwidth_ratio.
  double bandwidth_ratio = 100.0;
  PumpShapeKind shape = PumpShapeKind::FlatTop;
  /// Unfiltered window spans Omega in [0, window_factor * Delta_M].
  double window_factor = 2.0;
  double tolerance = 0.10;
};

struct CwConstantsReport {
  std::vector<CwConstantCase> cases;
  bool all_pass() const;
};

CwConstantsReport verify_cw_constants(const CwConstantsOptions& options = {});

}  // namespace sfwm
