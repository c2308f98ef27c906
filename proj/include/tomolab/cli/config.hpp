#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/inequalities.hpp"
#include "tomolab/states.hpp"

namespace tomolab::cli {

enum class OutputFormat { csv, json };

/// Parsed run configuration (JSON file). See README for the schema.
struct RunConfig {
  State state = FockSuperposition::vacuum();
  ModeGrid grid = ModeGrid::standard();
  std::vector<std::string> checks;  // validated check names
  std::vector<double> thetas{0.0};
  std::vector<double> qs{0.5};
  std::vector<SymplecticFrame> frames;  // multimode checks / symplectic output
  double frame_radius = 1.0;
  std::optional<double> tolerance;
  std::string output_path;
  OutputFormat format = OutputFormat::json;
  double mu_cutoff = 10.0;
  int mu_points = 512;
};

RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_text(const std::string& json_text);

/// One-mode sweep kinds ("shannon_position_momentum", "optical_shannon",
/// "optical_renyi", "symplectic_renyi"). Throws InvalidInputError for
/// multimode or unknown names.
CheckKind check_kind_from_name(const std::string& name);
bool is_multimode_check(const std::string& name);

}  // namespace tomolab::cli
