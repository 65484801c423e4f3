#pragma once

// Report assembly and serialization for the command-line tool. Text output
// uses three significant figures; JSON carries full precision.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfwm/cw_constants.hpp"
#include "sfwm/design_io.hpp"
#include "sfwm/limit_powers.hpp"
#include "sfwm/oracle.hpp"

namespace sfwm {

/// Three significant figures; fixed notation for 1e-3 <= |x| < 1e5.
std::string format_sig3(double x);
/// format_sig3 with "∞" for unbounded and a ">" prefix for lower bounds.
std::string format_power(const LimitPower& p);

nlohmann::json to_json(const LimitPower& p);
LimitPower limit_power_from_json(const nlohmann::json& j);

nlohmann::json limits_to_json(const DesignDocument& doc, const LimitReport& report);
std::string render_limits_text(const DesignDocument& doc, const LimitReport& report);
std::string render_limits_csv(const DesignDocument& doc, const LimitReport& report);

/// Recomputes the binding constraint from a limits JSON document: the ladder
/// entry with the smallest finite power.
std::string binding_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Reference table of limiting powers.

struct Table3Cell {
  std::string design;
  std::string citation;
  std::string row;  ///< P_XPM, P_multi, P_TPA, P_FCA/CWFCA
  std::string variant;
  LimitPower computed = LimitPower::unbounded();
  LimitPower reference = LimitPower::unbounded();
  double tolerance = 0.0;
  double rel_deviation = 0.0;  ///< 0 for matching unbounded cells
  bool pass = false;
};

struct Table3Result {
  std::vector<Table3Cell> cells;
  int passed() const;
  bool all_pass() const;
};

/// Reference cells for one bundled design, in row order.
std::vector<LimitPower> table3_reference(std::string_view design);
/// Designs whose inputs are quoted as approximate get twice the tolerance.
bool table3_approximate_inputs(std::string_view design);

/// Evaluates every row for the given designs against the reference cells.
Table3Result evaluate_table3(const std::vector<DesignDocument>& docs, double tolerance = 0.05);

std::string render_table3_text(const Table3Result& r);
std::string render_table3_csv(const Table3Result& r);
nlohmann::json table3_to_json(const Table3Result& r);

// ---------------------------------------------------------------------------
// Parameter sweeps.

enum class SweepVariable { Power, Duration, Q, Length };

SweepVariable parse_sweep_variable(std::string_view name);
std::string_view to_string(SweepVariable v);

struct SweepRow {
  double value = 0.0;  ///< swept variable, SI
  std::string regime;  ///< filtered, unfiltered, short-pulse, long-pulse, intermediate, cw
  bool in_regime = false;
  std::optional<double> n_pairs;  ///< per pulse (pulsed) or per second (CW)
  LimitPower p_xpm = LimitPower::unbounded();
  LimitPower p_spm = LimitPower::unbounded();
  std::optional<LimitPower> p_multi;  ///< absent in the intermediate ring band
  LimitPower p_tpa = LimitPower::unbounded();
  LimitPower p_fca = LimitPower::unbounded();  ///< FCA (pulsed) or CWFCA (CW)
  std::string binding;
};

/// Evenly spaced (or log-spaced) points over [from, to]. Every point is
/// validated before any evaluation; an invalid point throws ValidationError.
std::vector<SweepRow> run_sweep(const Design& base, SweepVariable variable, double from, double to,
                                int points, bool log_spacing = false);

std::string render_sweep_text(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed);
std::string render_sweep_csv(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed);

// ---------------------------------------------------------------------------

std::string render_oracle_text(const DesignDocument& doc, const OracleComparison& c);
nlohmann::json oracle_to_json(const DesignDocument& doc, const OracleComparison& c);

std::string render_cw_constants_text(const CwConstantsReport& r);
nlohmann::json cw_constants_to_json(const CwConstantsReport& r);

std::string render_materials_text(const MaterialsDb& db);
nlohmann::json materials_to_json(const MaterialsDb& db);

}  // namespace sfwm
