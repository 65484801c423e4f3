#include "sfwm/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sfwm/error.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/pair_rates.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

using nlohmann::json;

std::string format_sig3(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return x > 0 ? "∞" : (x < 0 ? "-∞" : "nan");
  const double ax = std::abs(x);
  if (ax >= 1e-3 && ax < 1e5) {
    const int e = static_cast<int>(std::floor(std::log10(ax)));
    const double q = std::pow(10.0, e - 2);
    const double rounded = std::round(x / q) * q;
    // Rounding can carry into the next decade (999.6 -> 1000).
    const int e2 = static_cast<int>(std::floor(std::log10(std::abs(rounded))));
    return fmt::format("{:.{}f}", rounded, std::max(0, 2 - e2));
  }
  return fmt::format("{:.2e}", x);
}

std::string format_power(const LimitPower& p) {
  switch (p.kind()) {
    case LimitPower::Kind::Unbounded: return "∞";
    case LimitPower::Kind::LowerBound: return ">" + format_sig3(p.watts());
    case LimitPower::Kind::Finite: break;
  }
  return format_sig3(p.watts());
}

namespace {

std::string_view kind_name(LimitPower::Kind k) {
  switch (k) {
    case LimitPower::Kind::Finite: return "finite";
    case LimitPower::Kind::Unbounded: return "unbounded";
    case LimitPower::Kind::LowerBound: return "lower-bound";
  }
  return "?";
}

std::string with_unit(const LimitPower& p) {
  return p.is_unbounded() ? format_power(p) : format_power(p) + " W";
}

}  // namespace

json to_json(const LimitPower& p) {
  json j;
  j["kind"] = kind_name(p.kind());
  j["watts"] = p.is_unbounded() ? json(nullptr) : json(p.watts());
  return j;
}

LimitPower limit_power_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "unbounded") return LimitPower::unbounded();
  const double w = j.at("watts").get<double>();
  if (kind == "lower-bound") return LimitPower::lower_bound(w);
  if (kind == "finite") return LimitPower::finite(w);
  throw ValidationError("unknown limit kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Limits report

namespace {

struct Row {
  std::string label;
  std::string ladder_name;
  LimitPower power;
  std::string note;
};

std::vector<Row> limit_rows(const LimitReport& r) {
  std::vector<Row> rows = {
      {"P_XPM", "XPM", r.p_xpm, ""},
      {"P_SPM", "SPM", r.p_spm, ""},
      {"P_multi", "multi-pair", r.p_multi, std::string(to_string(r.multi_variant))},
      {"P_TPA", "TPA", r.p_tpa, ""},
  };
  if (r.p_fca) rows.push_back({"P_FCA", "FCA", *r.p_fca, ""});
  if (r.p_cwfca) rows.push_back({"P_CWFCA", "CWFCA", *r.p_cwfca, ""});
  return rows;
}

}  // namespace

json limits_to_json(const DesignDocument& doc, const LimitReport& r) {
  json j;
  j["design"] = doc.name;
  j["citation"] = doc.citation;
  j["enhancement"] = r.enhancement_applied;
  json limits = json::object();
  for (const auto& row : limit_rows(r)) {
    auto v = to_json(row.power);
    if (!row.note.empty()) v["variant"] = row.note;
    limits[row.label] = v;
  }
  limits["P_TPA_pump"] = to_json(r.p_tpa_pump);
  j["limits"] = limits;
  json ladder = json::array();
  for (const auto& e : r.ladder) {
    auto v = to_json(e.power);
    v["name"] = e.name;
    ladder.push_back(v);
  }
  j["ladder"] = ladder;
  j["binding"] = r.binding;
  j["margin"] = r.margin;
  j["recommended_power"] = r.recommended_power;
  if (r.n_ss) j["n_ss"] = *r.n_ss;
  if (r.n_tot) j["n_tot"] = *r.n_tot;
  return j;
}

std::string render_limits_text(const DesignDocument& doc, const LimitReport& r) {
  std::string out = fmt::format("design: {}", doc.name);
  if (!doc.citation.empty()) out += fmt::format(" ({})", doc.citation);
  out += "\n";
  if (r.enhancement_applied != 1.0) {
    out += fmt::format("resonant enhancement |F|^2: {}\n", format_sig3(r.enhancement_applied));
  }
  for (const auto& row : limit_rows(r)) {
    std::string line = fmt::format("  {:<9} {:>12}", row.label, with_unit(row.power));
    if (!row.note.empty()) line += fmt::format("  ({})", row.note);
    if (row.ladder_name == r.binding) line += "  <- binding";
    out += line + "\n";
  }
  if (r.n_tot) out += fmt::format("  n_tot at design power: {}\n", format_sig3(*r.n_tot));
  out += fmt::format("binding constraint: {}\n", r.binding);
  out += fmt::format("recommended pump power (margin {}): {} W\n", format_sig3(r.margin),
                     format_sig3(r.recommended_power));
  return out;
}

std::string render_limits_csv(const DesignDocument& doc, const LimitReport& r) {
  std::string out = "design,quantity,watts,kind,variant,binding\n";
  for (const auto& row : limit_rows(r)) {
    out += fmt::format("{},{},{},{},{},{}\n", doc.name, row.label,
                       row.power.is_unbounded() ? "inf" : fmt::format("{:.17g}", row.power.watts()),
                       kind_name(row.power.kind()), row.note,
                       row.ladder_name == r.binding ? "yes" : "no");
  }
  return out;
}

std::string binding_from_json(const json& j) {
  std::string best;
  double best_w = std::numeric_limits<double>::infinity();
  for (const auto& e : j.at("ladder")) {
    const auto p = limit_power_from_json(e);
    if (p.watts() < best_w) {
      best_w = p.watts();
      best = e.at("name").get<std::string>();
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Reference table

int Table3Result::passed() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.pass; }));
}

bool Table3Result::all_pass() const { return passed() == static_cast<int>(cells.size()); }

std::vector<LimitPower> table3_reference(std::string_view design) {
  const auto inf = LimitPower::unbounded();
  auto f = LimitPower::finite;
  if (design == "pulsed-fiber-sio2") return {f(0.77), f(1.96), inf, inf};
  if (design == "cw-waveguide-as2s3") return {f(0.50), f(0.58), LimitPower::lower_bound(1183), inf};
  if (design == "pulsed-ring-diamond") return {f(1195), f(1.1e7), inf, inf};
  if (design == "cw-ring-si") return {f(0.83), f(0.018), f(8), f(0.06)};
  throw ValidationError("no reference cells for design '" + std::string(design) + "'");
}

bool table3_approximate_inputs(std::string_view design) { return design == "pulsed-fiber-sio2"; }

Table3Result evaluate_table3(const std::vector<DesignDocument>& docs, double tolerance) {
  Table3Result out;
  static const char* rows[] = {"P_XPM", "P_multi", "P_TPA", "P_FCA/CWFCA"};
  for (const auto& doc : docs) {
    const auto ref = table3_reference(doc.name);
    const auto r = classify(doc.design);
    const LimitPower fca = r.p_fca ? *r.p_fca : *r.p_cwfca;
    const LimitPower computed[] = {r.p_xpm, r.p_multi, r.p_tpa, fca};
    const double tol = table3_approximate_inputs(doc.name) ? 2.0 * tolerance : tolerance;
    for (int k = 0; k < 4; ++k) {
      Table3Cell c;
      c.design = doc.name;
      c.citation = doc.citation;
      c.row = rows[k];
      c.variant = k == 1 ? std::string(to_string(r.multi_variant)) : "";
      c.computed = computed[k];
      c.reference = ref[k];
      c.tolerance = tol;
      if (c.computed.kind() != c.reference.kind()) {
        c.pass = false;
        c.rel_deviation = std::numeric_limits<double>::quiet_NaN();
      } else if (c.reference.is_unbounded()) {
        c.pass = true;
      } else {
        c.rel_deviation = (c.computed.watts() - c.reference.watts()) / c.reference.watts();
        c.pass = std::abs(c.rel_deviation) <= tol;
      }
      out.cells.push_back(c);
    }
  }
  return out;
}

std::string render_table3_text(const Table3Result& r) {
  std::vector<std::string> designs;
  for (const auto& c : r.cells) {
    if (std::find(designs.begin(), designs.end(), c.design) == designs.end()) designs.push_back(c.design);
  }
  std::string out = fmt::format("{:<12}", "");
  for (const auto& d : designs) out += fmt::format(" {:>22}", d);
  out += "\n";
  static const char* rows[] = {"P_XPM", "P_multi", "P_TPA", "P_FCA/CWFCA"};
  for (const char* row : rows) {
    out += fmt::format("{:<12}", row);
    for (const auto& d : designs) {
      const auto it = std::find_if(r.cells.begin(), r.cells.end(),
                                   [&](const auto& c) { return c.design == d && c.row == row; });
      const std::string cell = format_power(it->computed) + (it->pass ? "" : " (!)");
      // Pad by code points: "∞" is three bytes.
      const auto bytes = cell.size();
      const auto extra = cell.find("∞") != std::string::npos ? 2 : 0;
      out += std::string(22 - std::min<std::size_t>(22, bytes - extra) + 1, ' ') + cell;
    }
    out += "\n";
  }
  out += fmt::format("{}/{} cells within tolerance\n", r.passed(), r.cells.size());
  for (const auto& c : r.cells) {
    if (!c.pass) {
      out += fmt::format("  mismatch: {} {}: computed {} vs reference {} (tolerance {}%)\n",
                         c.design, c.row, format_power(c.computed), format_power(c.reference),
                         format_sig3(100.0 * c.tolerance));
    }
  }
  return out;
}

std::string render_table3_csv(const Table3Result& r) {
  std::string out = "design,row,variant,computed_watts,computed_kind,reference_watts,reference_kind,"
                    "rel_deviation,tolerance,pass\n";
  auto w = [](const LimitPower& p) {
    return p.is_unbounded() ? std::string("inf") : fmt::format("{:.17g}", p.watts());
  };
  for (const auto& c : r.cells) {
    out += fmt::format("{},{},{},{},{},{},{},{:.6g},{},{}\n", c.design, c.row, c.variant,
                       w(c.computed), kind_name(c.computed.kind()), w(c.reference),
                       kind_name(c.reference.kind()), c.rel_deviation, c.tolerance,
                       c.pass ? "yes" : "no");
  }
  return out;
}

json table3_to_json(const Table3Result& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json j;
    j["design"] = c.design;
    j["row"] = c.row;
    if (!c.variant.empty()) j["variant"] = c.variant;
    j["computed"] = to_json(c.computed);
    j["reference"] = to_json(c.reference);
    j["rel_deviation"] = std::isfinite(c.rel_deviation) ? json(c.rel_deviation) : json(nullptr);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    j["provenance"] = {{"source", c.citation},
                       {"inputs", "bundled design " + c.design + " with the materials database"},
                       {"approximate_inputs", table3_approximate_inputs(c.design)}};
    cells.push_back(j);
  }
  return {{"cells", cells}, {"passed", r.passed()}, {"total", r.cells.size()}};
}

// ---------------------------------------------------------------------------
// Sweeps

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "P") return SweepVariable::Power;
  if (name == "T") return SweepVariable::Duration;
  if (name == "Q") return SweepVariable::Q;
  if (name == "L") return SweepVariable::Length;
  throw ValidationError("unknown sweep variable '" + std::string(name) + "' (P, T, Q or L)");
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Power: return "P";
    case SweepVariable::Duration: return "T";
    case SweepVariable::Q: return "Q";
    case SweepVariable::Length: return "L";
  }
  return "?";
}

namespace {

std::string_view sweep_unit(SweepVariable v) {
  switch (v) {
    case SweepVariable::Power: return "W";
    case SweepVariable::Duration: return "s";
    case SweepVariable::Q: return "";
    case SweepVariable::Length: return "m";
  }
  return "";
}

Design apply(const Design& base, SweepVariable v, double value) {
  Design d = base;
  switch (v) {
    case SweepVariable::Power: d.pump.power = value; break;
    case SweepVariable::Duration:
      if (!d.pump.pulsed()) throw ValidationError("sweep over T needs a pulsed pump");
      d.pump.fwhm = value;
      break;
    case SweepVariable::Q:
      if (auto* ring = std::get_if<RingGeometry>(&d.structure)) ring->q_factor = value;
      else throw ValidationError("sweep over Q needs a ring");
      break;
    case SweepVariable::Length:
      if (auto* ring = std::get_if<RingGeometry>(&d.structure)) ring->circumference = value;
      else std::get<ChannelGeometry>(d.structure).length = value;
      break;
  }
  return d;
}

std::string regime_tag(const Design& d, const DerivedScales& s) {
  if (!d.pump.pulsed()) return "cw";
  if (is_ring(d.structure)) {
    const double ratio = *s.delta_p / *s.delta_r;
    if (ratio >= kDefaultRegimeFactor) return "short-pulse";
    if (ratio <= 1.0 / kDefaultRegimeFactor) return "long-pulse";
    return "intermediate";
  }
  return d.filter ? "filtered" : "unfiltered";
}

SweepRow evaluate_point(const Design& d, double value) {
  SweepRow row;
  row.value = value;
  const auto s = derive_scales(d);
  const double a_eff = structure_area(d.structure);
  row.regime = regime_tag(d, s);
  row.p_xpm = p_xpm(s);
  row.p_spm = p_spm(s);
  row.p_tpa = p_tpa(d.material, s, d.pump.wavelength);
  row.p_fca = d.pump.pulsed() ? p_fca(d.material, d.pump, a_eff, s)
                              : p_cwfca(d.material, d.pump, a_eff, s);
  try {
    row.p_multi = LimitPower::finite(p_multi(s, d.structure, d.pump, d.filter).watts);
  } catch (const RegimeError&) {
  }
  try {
    if (d.pump.pulsed()) {
      const auto cf = n_pairs_closed_form(d, s);
      row.n_pairs = cf.n_pairs;
      row.in_regime = cf.in_regime();
    } else {
      row.n_pairs = cw_pair_rate(d, s).pairs_per_second;
      row.in_regime = true;
    }
  } catch (const RegimeError&) {
  }

  std::vector<std::pair<std::string, LimitPower>> ladder = {
      {"XPM", row.p_xpm}, {"SPM", row.p_spm}, {"TPA", row.p_tpa},
      {d.pump.pulsed() ? "FCA" : "CWFCA", row.p_fca}};
  if (row.p_multi) ladder.insert(ladder.begin() + 2, {"multi-pair", *row.p_multi});
  const auto best = std::min_element(ladder.begin(), ladder.end(), [](const auto& a, const auto& b) {
    return a.second.watts() < b.second.watts();
  });
  row.binding = best->first;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Design& base, SweepVariable variable, double from, double to,
                                int points, bool log_spacing) {
  if (points < 1) throw ValidationError("sweep needs at least one point");
  if (!std::isfinite(from) || !std::isfinite(to)) throw ValidationError("sweep range must be finite");
  if (log_spacing && (from <= 0.0 || to <= 0.0)) {
    throw ValidationError("log-spaced sweep needs a positive range");
  }
  std::vector<double> values(points);
  for (int k = 0; k < points; ++k) {
    const double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
    values[k] = log_spacing ? from * std::pow(to / from, t) : from + (to - from) * t;
  }
  std::vector<Design> designs;
  designs.reserve(points);
  for (double v : values) {
    auto d = apply(base, variable, v);
    const auto check = validate_design(d);
    if (!check.ok()) {
      throw ValidationError(fmt::format("sweep point {} = {} is invalid: {}", to_string(variable), v,
                                        fmt::join(check.violations, "; ")));
    }
    designs.push_back(std::move(d));
  }
  std::vector<SweepRow> rows;
  rows.reserve(points);
  for (int k = 0; k < points; ++k) rows.push_back(evaluate_point(designs[k], values[k]));
  return rows;
}

namespace {

std::string opt_num(const std::optional<double>& v) {
  return v ? fmt::format("{:.10g}", *v) : std::string();
}

std::string num(const LimitPower& p) {
  return p.is_unbounded() ? std::string("inf") : fmt::format("{:.10g}", p.watts());
}

}  // namespace

std::string render_sweep_csv(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed) {
  std::string out = fmt::format("{}_{},regime,in_regime,{},P_XPM,P_SPM,P_multi,P_TPA,{},binding\n",
                                to_string(v), sweep_unit(v).empty() ? "value" : sweep_unit(v),
                                pulsed ? "n_pairs_per_pulse" : "pairs_per_second",
                                pulsed ? "P_FCA" : "P_CWFCA");
  for (const auto& r : rows) {
    out += fmt::format("{:.10g},{},{},{},{},{},{},{},{},{}\n", r.value, r.regime,
                       r.in_regime ? "yes" : "no", opt_num(r.n_pairs), num(r.p_xpm), num(r.p_spm),
                       r.p_multi ? num(*r.p_multi) : std::string(), num(r.p_tpa), num(r.p_fca),
                       r.binding);
  }
  return out;
}

std::string render_sweep_text(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed) {
  std::string out = fmt::format("{:>12} {:>13} {:>11} {:>10} {:>10} {:>10} {:>10} {:>10}  {}\n",
                                fmt::format("{} [{}]", to_string(v), sweep_unit(v)), "regime",
                                pulsed ? "N/pulse" : "pairs/s", "P_XPM", "P_SPM", "P_multi", "P_TPA",
                                pulsed ? "P_FCA" : "P_CWFCA", "binding");
  auto pad = [](const std::string& s, std::size_t width) {
    const std::size_t len = s.find("∞") != std::string::npos ? s.size() - 2 : s.size();
    return std::string(width > len ? width - len : 0, ' ') + s;
  };
  for (const auto& r : rows) {
    std::string regime = r.regime;
    if (regime == "intermediate") regime = "*intermediate";
    else if (!r.in_regime && r.n_pairs) regime += "?";
    out += fmt::format("{:>12} {:>13} {:>11} {} {} {} {} {}  {}\n", format_sig3(r.value), regime,
                       r.n_pairs ? format_sig3(*r.n_pairs) : "-", pad(format_power(r.p_xpm), 10),
                       pad(format_power(r.p_spm), 10),
                       pad(r.p_multi ? format_power(*r.p_multi) : "-", 10),
                       pad(format_power(r.p_tpa), 10), pad(format_power(r.p_fca), 10), r.binding);
  }
  const bool any_intermediate = std::any_of(rows.begin(), rows.end(),
                                            [](const auto& r) { return r.regime == "intermediate"; });
  if (any_intermediate) {
    out += "* intermediate band (Delta_P ~ Delta_R): no closed form, use the oracle\n";
  }
  return out;
}

json sweep_to_json(const std::vector<SweepRow>& rows, SweepVariable v, bool pulsed) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["value"] = r.value;
    j["regime"] = r.regime;
    j["in_regime"] = r.in_regime;
    j[pulsed ? "n_pairs_per_pulse" : "pairs_per_second"] = r.n_pairs ? json(*r.n_pairs) : json(nullptr);
    j["P_XPM"] = to_json(r.p_xpm);
    j["P_SPM"] = to_json(r.p_spm);
    j["P_multi"] = r.p_multi ? to_json(*r.p_multi) : json(nullptr);
    j["P_TPA"] = to_json(r.p_tpa);
    j[pulsed ? "P_FCA" : "P_CWFCA"] = to_json(r.p_fca);
    j["binding"] = r.binding;
    arr.push_back(j);
  }
  return {{"variable", to_string(v)}, {"unit", sweep_unit(v)}, {"rows", arr}};
}

// ---------------------------------------------------------------------------

std::string render_oracle_text(const DesignDocument& doc, const OracleComparison& c) {
  std::string out = fmt::format("design: {}\n", doc.name);
  out += fmt::format("  regime:       {}\n", c.regime ? std::string(to_string(*c.regime)) : "none");
  out += fmt::format("  closed form:  {}\n", c.closed_form ? format_sig3(*c.closed_form) : "-");
  out += fmt::format("  oracle:       {}  ({}^2 grid, boundary/peak {})\n", format_sig3(c.oracle),
                     c.points, format_sig3(c.boundary_ratio));
  if (c.rel_deviation) {
    out += fmt::format("  deviation:    {}%\n", format_sig3(100.0 * *c.rel_deviation));
  }
  for (const auto& v : c.validity) {
    out += fmt::format("  validity:     {} (margin {}) {}\n", v.condition, format_sig3(v.margin),
                       v.pass ? "ok" : "NOT satisfied");
  }
  if (c.verdict) {
    out += fmt::format("  verdict:      {} (tolerance {}%)\n", *c.verdict ? "PASS" : "FAIL",
                       format_sig3(100.0 * c.tolerance));
  } else {
    out += "  verdict:      none (no closed form claims validity)\n";
  }
  if (!c.note.empty()) out += fmt::format("  note:         {}\n", c.note);
  return out;
}

json oracle_to_json(const DesignDocument& doc, const OracleComparison& c) {
  json validity = json::array();
  for (const auto& v : c.validity) {
    validity.push_back({{"condition", v.condition}, {"margin", v.margin}, {"pass", v.pass}});
  }
  return {{"design", doc.name},
          {"regime", c.regime ? json(std::string(to_string(*c.regime))) : json(nullptr)},
          {"closed_form", c.closed_form ? json(*c.closed_form) : json(nullptr)},
          {"oracle", c.oracle},
          {"rel_deviation", c.rel_deviation ? json(*c.rel_deviation) : json(nullptr)},
          {"validity", validity},
          {"tolerance", c.tolerance},
          {"verdict", c.verdict ? json(*c.verdict) : json(nullptr)},
          {"grid_points", c.points},
          {"boundary_ratio", c.boundary_ratio},
          {"note", c.note}};
}

std::string render_cw_constants_text(const CwConstantsReport& r) {
  std::string out;
  for (const auto& c : r.cases) {
    out += fmt::format(
        "{:<11} closed form {:.4f}  quoted {:.2f}  numeric {:.4f}  deviation {:+.1f}%  K {:.1f}  {}\n",
        c.name, c.closed_form, c.reference, c.numeric, 100.0 * c.rel_deviation, c.schmidt_number,
        c.pass ? "PASS" : "FAIL");
  }
  return out;
}

json cw_constants_to_json(const CwConstantsReport& r) {
  json arr = json::array();
  for (const auto& c : r.cases) {
    arr.push_back({{"name", c.name},
                   {"closed_form", c.closed_form},
                   {"quoted", c.reference},
                   {"numeric", c.numeric},
                   {"rel_deviation", c.rel_deviation},
                   {"schmidt_number", c.schmidt_number},
                   {"pump_to_target_bandwidth", c.pump_to_target},
                   {"grid_points", c.points},
                   {"pass", c.pass}});
  }
  return {{"cases", arr}, {"all_pass", r.all_pass()}};
}

std::string render_materials_text(const MaterialsDb& db) {
  std::string out = fmt::format("{:<10} {:>12} {:>12} {:>12} {:>10}\n", "name", "n2[m^2/W]",
                                "beta_tpa[m/W]", "sigma_fca[m^2]", "tau_c[s]");
  auto g = [](double x) { return x == 0.0 ? std::string("-") : fmt::format("{:.3g}", x); };
  for (const auto& m : db.all()) {
    out += fmt::format("{:<10} {:>12} {:>12} {:>12} {:>10}\n", m.name, g(m.n2),
                       (m.beta_tpa_is_upper_bound ? "<" : "") + g(m.beta_tpa), g(m.sigma_fca),
                       g(m.tau_c));
  }
  return out;
}

json materials_to_json(const MaterialsDb& db) {
  json arr = json::array();
  for (const auto& m : db.all()) {
    arr.push_back({{"name", m.name},
                   {"n2", m.n2},
                   {"beta_tpa", m.beta_tpa},
                   {"beta_tpa_upper_bound", m.beta_tpa_is_upper_bound},
                   {"sigma_fca", m.sigma_fca},
                   {"tau_c", m.tau_c}});
  }
  return arr;
}

}  // namespace sfwm
