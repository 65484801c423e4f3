#pragma once

// Ingestion of the materials database and JSON design documents.

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfwm/jsa.hpp"
#include "sfwm/model.hpp"

namespace sfwm {

class MaterialsDb {
 public:
  static MaterialsDb parse(std::istream& in);
  static MaterialsDb load(const std::filesystem::path& path);

  const Material& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<Material>& all() const { return materials_; }

 private:
  std::vector<Material> materials_;
};

/// Optional numerical-oracle settings carried by a design document.
struct OracleSpec {
  int points = 256;
  std::optional<double> half_span;  ///< rad/s; default chosen from the regime
  EnhancementForm ring_form = EnhancementForm::Airy;
};

struct DesignDocument {
  std::string name;
  std::string citation;
  Design design;
  std::optional<OracleSpec> oracle;
};

/// Parses a JSON design document. Comments are allowed, quantities may be
/// numbers (SI) or strings with a unit ("5 ps"), unknown keys are rejected.
/// Material references resolve against `db`.
DesignDocument parse_design(std::string_view text, const MaterialsDb& db);
DesignDocument load_design(const std::filesystem::path& path, const MaterialsDb& db);

/// Default data directory (bundled designs and materials), overridable with
/// the SFWM_DATA_DIR environment variable.
std::filesystem::path data_dir();

/// Names of the bundled designs, in the column order of the reference table.
const std::vector<std::string>& bundled_design_names();
DesignDocument load_bundled(std::string_view name, const std::filesystem::path& dir);

}  // namespace sfwm
