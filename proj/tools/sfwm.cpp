// Command-line front end: limiting powers, reference table, sweeps, oracle
// comparisons and the materials database.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sfwm/cw_constants.hpp"
#include "sfwm/design_io.hpp"
#include "sfwm/error.hpp"
#include "sfwm/jsa.hpp"
#include "sfwm/limit_powers.hpp"
#include "sfwm/oracle.hpp"
#include "sfwm/report.hpp"
#include "sfwm/units.hpp"

namespace fs = std::filesystem;
using namespace sfwm;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kConvergence = 2 };

struct Common {
  std::string data_dir;
  bool json = false;
  bool csv = false;

  fs::path dir() const { return data_dir.empty() ? sfwm::data_dir() : fs::path(data_dir); }
};

// A path to a design file, or the name of a bundled design.
DesignDocument resolve_design(const std::string& arg, const Common& c) {
  const auto db = MaterialsDb::load(c.dir() / "materials.txt");
  if (fs::exists(arg)) return load_design(arg, db);
  const auto bundled = c.dir() / "designs" / (arg + ".json");
  if (fs::exists(bundled)) return load_design(bundled, db);
  throw ValidationError("no design file or bundled design named '" + arg + "'");
}

units::Dimension sweep_dimension(SweepVariable v) {
  switch (v) {
    case SweepVariable::Power: return units::Dimension::Power;
    case SweepVariable::Duration: return units::Dimension::Time;
    case SweepVariable::Q: return units::Dimension::Dimensionless;
    case SweepVariable::Length: return units::Dimension::Length;
  }
  return units::Dimension::Any;
}

void add_format_flags(CLI::App* cmd, Common& c) {
  auto* j = cmd->add_flag("--json", c.json, "machine-readable JSON output");
  auto* s = cmd->add_flag("--csv", c.csv, "CSV output");
  j->excludes(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting pump powers and pair rates for SFWM photon-pair sources"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--data-dir", common.data_dir, "directory holding materials.txt and designs/");

  // limits
  std::string limits_design;
  double margin = 1.0;
  auto* limits = app.add_subcommand("limits", "power ladder and binding constraint of a design");
  limits->add_option("design", limits_design, "design file or bundled design name")->required();
  limits->add_option("--margin", margin, "safety factor applied to the binding limit")
      ->check(CLI::PositiveNumber);
  add_format_flags(limits, common);

  // table3
  double tolerance = 0.05;
  auto* table3 = app.add_subcommand("table3", "limiting powers of the four bundled designs");
  table3->add_option("--tolerance", tolerance, "relative tolerance (doubled for approximate inputs)")
      ->check(CLI::PositiveNumber);
  add_format_flags(table3, common);

  // sweep
  std::string sweep_design, sweep_var, sweep_from, sweep_to;
  int sweep_points = 11;
  bool sweep_log = false;
  auto* sweep = app.add_subcommand("sweep", "evaluate a design over a range of P, T, Q or L");
  sweep->add_option("design", sweep_design, "design file or bundled design name")->required();
  sweep->add_option("--var", sweep_var, "swept variable: P, T, Q or L")->required();
  sweep->add_option("--from", sweep_from, "start value, e.g. \"0.1 ps\" (bare numbers are SI)")
      ->required();
  sweep->add_option("--to", sweep_to, "end value")->required();
  sweep->add_option("--points", sweep_points, "number of points")->check(CLI::PositiveNumber);
  sweep->add_flag("--log", sweep_log, "logarithmic spacing");
  add_format_flags(sweep, common);

  // oracle
  std::string oracle_design, export_path;
  int grid = 0;
  bool lorentzian = false;
  bool cw_constants = false;
  auto* oracle = app.add_subcommand("oracle", "closed form vs numerical pair integral");
  oracle->add_option("design", oracle_design, "design file or bundled design name");
  oracle->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(8, 4096));
  oracle->add_flag("--lorentzian", lorentzian, "Lorentzian instead of Airy ring enhancement");
  oracle->add_option("--export-jsa", export_path, "write the joint spectral amplitude to a file");
  oracle->add_flag("--cw-constants", cw_constants, "estimate the CW multi-pair prefactors");
  add_format_flags(oracle, common);

  // materials
  auto* materials = app.add_subcommand("materials", "list the materials database");
  add_format_flags(materials, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (limits->parsed()) {
      const auto doc = resolve_design(limits_design, common);
      const auto report = classify(doc.design, margin);
      if (common.json) std::cout << limits_to_json(doc, report).dump(2) << "\n";
      else if (common.csv) std::cout << render_limits_csv(doc, report);
      else std::cout << render_limits_text(doc, report);
    } else if (table3->parsed()) {
      std::vector<DesignDocument> docs;
      for (const auto& name : bundled_design_names()) docs.push_back(resolve_design(name, common));
      const auto result = evaluate_table3(docs, tolerance);
      if (common.json) std::cout << table3_to_json(result).dump(2) << "\n";
      else if (common.csv) std::cout << render_table3_csv(result);
      else std::cout << render_table3_text(result);
    } else if (sweep->parsed()) {
      const auto doc = resolve_design(sweep_design, common);
      const auto var = parse_sweep_variable(sweep_var);
      const auto dim = sweep_dimension(var);
      const auto rows = run_sweep(doc.design, var, units::parse_quantity(sweep_from, dim),
                                  units::parse_quantity(sweep_to, dim), sweep_points, sweep_log);
      const bool pulsed = doc.design.pump.pulsed();
      if (common.json) std::cout << sweep_to_json(rows, var, pulsed).dump(2) << "\n";
      else if (common.csv) std::cout << render_sweep_csv(rows, var, pulsed);
      else std::cout << render_sweep_text(rows, var, pulsed);
    } else if (oracle->parsed()) {
      if (cw_constants) {
        CwConstantsOptions opt;
        if (grid) opt.points = grid;
        const auto r = verify_cw_constants(opt);
        if (common.json) std::cout << cw_constants_to_json(r).dump(2) << "\n";
        else std::cout << render_cw_constants_text(r);
        return kOk;
      }
      if (oracle_design.empty()) throw ValidationError("oracle: give a design or --cw-constants");
      const auto doc = resolve_design(oracle_design, common);
      OracleSpec spec = doc.oracle.value_or(OracleSpec{});
      if (grid) spec.points = grid;
      if (lorentzian) spec.ring_form = EnhancementForm::Lorentzian;
      const auto cmp = compare_with_oracle(doc.design, spec);
      if (!export_path.empty()) {
        QuadratureOptions q;
        q.ring_form = spec.ring_form;
        const auto jsa = build_jsa(doc.design.material, doc.design.structure, doc.design.pump,
                                   default_grid(doc.design, spec), q);
        std::ofstream out(export_path);
        if (!out) throw ValidationError("cannot write " + export_path);
        write_jsa(out, jsa);
      }
      if (common.json) std::cout << oracle_to_json(doc, cmp).dump(2) << "\n";
      else std::cout << render_oracle_text(doc, cmp);
    } else if (materials->parsed()) {
      const auto db = MaterialsDb::load(common.dir() / "materials.txt");
      if (common.json) std::cout << materials_to_json(db).dump(2) << "\n";
      else std::cout << render_materials_text(db);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
