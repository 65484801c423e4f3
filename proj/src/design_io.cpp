#include "sfwm/design_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "sfwm/error.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "n2[m^2/W]" -> ("n2", "m^2/W")
std::pair<std::string, std::string> split_column(const std::string& col) {
  const auto lb = col.find('[');
  if (lb == std::string::npos || col.back() != ']') return {col, ""};
  return {col.substr(0, lb), col.substr(lb + 1, col.size() - lb - 2)};
}

}  // namespace

MaterialsDb MaterialsDb::parse(std::istream& in) {
  MaterialsDb db;
  std::vector<std::pair<std::string, std::string>> columns;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("units:");
      if (pos != std::string::npos) {
        std::istringstream hs(line.substr(pos + 6));
        std::string col;
        columns.clear();
        while (hs >> col) columns.push_back(split_column(col));
      }
      continue;
    }
    if (columns.empty()) throw ValidationError("materials file: record before the units header");
    std::istringstream ls(line);
    std::vector<std::string> fields;
    std::string f;
    while (ls >> f) fields.push_back(f);
    if (fields.size() != columns.size()) {
      throw ValidationError("materials file line " + std::to_string(lineno) + ": expected " +
                            std::to_string(columns.size()) + " fields");
    }
    Material m;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& [key, unit] = columns[i];
      if (key == "name") {
        m.name = fields[i];
        continue;
      }
      std::string text = fields[i];
      const bool bound = !text.empty() && text[0] == '<';
      if (bound) text.erase(0, 1);
      const double v = units::to_si(units::parse_quantity(text), unit);
      if (key == "n2") m.n2 = v;
      else if (key == "beta_tpa") {
        m.beta_tpa = v;
        m.beta_tpa_is_upper_bound = bound;
      } else if (key == "sigma_fca") m.sigma_fca = v;
      else if (key == "tau_c") m.tau_c = v;
      else throw ValidationError("materials file: unknown column '" + key + "'");
      if (bound && key != "beta_tpa") {
        throw ValidationError("materials file: bounds are only supported for beta_tpa");
      }
    }
    if (m.name.empty()) throw ValidationError("materials file: record without a name");
    if (db.contains(m.name)) throw ValidationError("materials file: duplicate '" + m.name + "'");
    db.materials_.push_back(m);
  }
  return db;
}

MaterialsDb MaterialsDb::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open materials file " + path.string());
  return parse(in);
}

bool MaterialsDb::contains(std::string_view name) const {
  return std::any_of(materials_.begin(), materials_.end(),
                     [&](const Material& m) { return m.name == name; });
}

const Material& MaterialsDb::get(std::string_view name) const {
  for (const auto& m : materials_) {
    if (m.name == name) return m;
  }
  throw ValidationError("unknown material '" + std::string(name) + "'");
}

namespace {

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ValidationError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

using units::Dimension;

double quantity(const json& v, std::string_view key, Dimension dim) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return units::parse_quantity(v.get<std::string>(), dim);
  throw ValidationError(std::string(key) + ": expected a number or a quantity string");
}

double required(const json& obj, const char* key, std::string_view where, Dimension dim) {
  if (!obj.contains(key)) throw ValidationError(std::string(where) + ": missing '" + key + "'");
  return quantity(obj.at(key), key, dim);
}

std::optional<double> optional_q(const json& obj, const char* key, Dimension dim) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return quantity(obj.at(key), key, dim);
}

Material parse_material(const json& j, const MaterialsDb& db) {
  if (j.is_string()) return db.get(j.get<std::string>());
  check_keys(j, "material", {"name", "n2", "beta_tpa", "beta_tpa_upper_bound", "sigma_fca", "tau_c"});
  Material m;
  m.name = j.value("name", std::string("custom"));
  m.n2 = required(j, "n2", "material", Dimension::NonlinearIndex);
  m.beta_tpa = optional_q(j, "beta_tpa", Dimension::TpaCoefficient).value_or(0.0);
  m.beta_tpa_is_upper_bound = j.value("beta_tpa_upper_bound", false);
  m.sigma_fca = optional_q(j, "sigma_fca", Dimension::Area).value_or(0.0);
  m.tau_c = optional_q(j, "tau_c", Dimension::Time).value_or(0.0);
  return m;
}

Structure parse_structure(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw ValidationError("structure: missing 'type'");
  const auto type = j.at("type").get<std::string>();
  if (type == "channel") {
    check_keys(j, "structure", {"type", "length", "a_eff", "beta2", "gamma"});
    ChannelGeometry c;
    c.length = required(j, "length", "structure", Dimension::Length);
    c.a_eff = required(j, "a_eff", "structure", Dimension::Area);
    c.beta2 = optional_q(j, "beta2", Dimension::Dispersion).value_or(0.0);
    c.gamma = optional_q(j, "gamma", Dimension::Gamma);
    return c;
  }
  if (type == "ring") {
    check_keys(j, "structure", {"type", "circumference", "radius", "a_eff", "q_factor", "n_eff",
                                "group_index", "gamma", "coupling"});
    RingGeometry r;
    if (j.contains("circumference") == j.contains("radius")) {
      throw ValidationError("structure: give exactly one of 'circumference' or 'radius'");
    }
    r.circumference = j.contains("radius") ? 2.0 * kPi * required(j, "radius", "structure", Dimension::Length)
                                           : required(j, "circumference", "structure", Dimension::Length);
    r.a_eff = required(j, "a_eff", "structure", Dimension::Area);
    r.q_factor = required(j, "q_factor", "structure", Dimension::Dimensionless);
    r.n_eff = required(j, "n_eff", "structure", Dimension::Dimensionless);
    r.group_index = optional_q(j, "group_index", Dimension::Dimensionless);
    r.gamma = optional_q(j, "gamma", Dimension::Gamma);
    if (j.contains("coupling")) {
      const auto& c = j.at("coupling");
      check_keys(c, "coupling", {"kappa", "sigma"});
      r.coupling = RingCoupling{required(c, "kappa", "coupling", Dimension::Dimensionless),
                                 required(c, "sigma", "coupling", Dimension::Dimensionless)};
    }
    return r;
  }
  throw ValidationError("structure: unknown type '" + type + "' (channel or ring)");
}

PumpShape parse_shape(const json& j) {
  PumpShape s;
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "gaussian") s.kind = PumpShapeKind::Gaussian;
    else if (name == "sech") s.kind = PumpShapeKind::Sech;
    else if (name == "flat-top") s.kind = PumpShapeKind::FlatTop;
    else throw ValidationError("pump shape: unknown '" + name + "' (gaussian, sech, flat-top)");
    return s;
  }
  check_keys(j, "pump shape", {"samples"});
  s.kind = PumpShapeKind::Custom;
  for (const auto& p : j.at("samples")) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("pump shape: samples are [offset, amplitude]");
    s.samples.emplace_back(quantity(p[0], "offset", Dimension::AngularFrequency), p[1].get<double>());
  }
  return s;
}

PumpSpec parse_pump(const json& j) {
  check_keys(j, "pump", {"mode", "wavelength", "power", "fwhm", "rep_rate", "shape"});
  PumpSpec p;
  const auto mode = j.value("mode", std::string("cw"));
  if (mode == "cw") p.mode = PumpMode::CW;
  else if (mode == "pulsed") p.mode = PumpMode::Pulsed;
  else throw ValidationError("pump: unknown mode '" + mode + "' (cw or pulsed)");
  p.wavelength = required(j, "wavelength", "pump", Dimension::Length);
  p.power = required(j, "power", "pump", Dimension::Power);
  p.fwhm = optional_q(j, "fwhm", Dimension::Time);
  p.rep_rate = optional_q(j, "rep_rate", Dimension::Frequency);
  if (j.contains("shape")) p.shape = parse_shape(j.at("shape"));
  return p;
}

FilterSpec parse_filter(const json& j) {
  check_keys(j, "filter", {"bandwidth", "detuning"});
  return {required(j, "bandwidth", "filter", Dimension::Frequency), optional_q(j, "detuning", Dimension::AngularFrequency).value_or(0.0)};
}

OracleSpec parse_oracle(const json& j) {
  check_keys(j, "oracle", {"points", "half_span", "ring_form"});
  OracleSpec o;
  o.points = j.value("points", o.points);
  o.half_span = optional_q(j, "half_span", Dimension::AngularFrequency);
  const auto form = j.value("ring_form", std::string("airy"));
  if (form == "airy") o.ring_form = EnhancementForm::Airy;
  else if (form == "lorentzian") o.ring_form = EnhancementForm::Lorentzian;
  else throw ValidationError("oracle: unknown ring_form '" + form + "'");
  if (o.points < 8) throw ValidationError("oracle: points must be >= 8");
  return o;
}

}  // namespace

DesignDocument parse_design(std::string_view text, const MaterialsDb& db) {
  json j;
  try {
    j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("design document: ") + e.what());
  }
  try {
    check_keys(j, "design", {"name", "citation", "material", "structure", "pump", "filter", "oracle"});
    DesignDocument doc;
    doc.name = j.value("name", std::string());
    doc.citation = j.value("citation", std::string());
    if (!j.contains("material") || !j.contains("structure") || !j.contains("pump")) {
      throw ValidationError("design: 'material', 'structure' and 'pump' are required");
    }
    doc.design.material = parse_material(j.at("material"), db);
    doc.design.structure = parse_structure(j.at("structure"));
    doc.design.pump = parse_pump(j.at("pump"));
    if (j.contains("filter") && !j.at("filter").is_null()) {
      doc.design.filter = parse_filter(j.at("filter"));
    }
    if (j.contains("oracle")) doc.oracle = parse_oracle(j.at("oracle"));
    require_valid(doc.design);
    return doc;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("design document: ") + e.what());
  }
}

DesignDocument load_design(const std::filesystem::path& path, const MaterialsDb& db) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open design file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto doc = parse_design(ss.str(), db);
  if (doc.name.empty()) doc.name = path.stem().string();
  return doc;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SFWM_DATA_DIR"); env && *env) return env;
#ifdef SFWM_DEFAULT_DATA_DIR
  return SFWM_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

const std::vector<std::string>& bundled_design_names() {
  static const std::vector<std::string> names = {"pulsed-fiber-sio2", "cw-waveguide-as2s3",
                                                 "pulsed-ring-diamond", "cw-ring-si"};
  return names;
}

DesignDocument load_bundled(std::string_view name, const std::filesystem::path& dir) {
  const auto db = MaterialsDb::load(dir / "materials.txt");
  return load_design(dir / "designs" / (std::string(name) + ".json"), db);
}

}  // namespace sfwm
