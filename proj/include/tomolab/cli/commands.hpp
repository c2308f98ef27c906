#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tomolab/cli/config.hpp"
#include "tomolab/cli/dataset.hpp"

namespace tomolab::cli {

/// Flag values that override the config file.
struct CommandOverrides {
  std::optional<std::string> out;
  std::optional<OutputFormat> format;
  std::optional<double> tolerance;
};

/// Run the configured inequality sweep and write one report row per check.
/// Returns 0 when every report is satisfied, 1 otherwise.
int run_check_command(const RunConfig& config, const CommandOverrides& = {});

/// Write the configured tomograms (optical rows `theta,X,w`, or symplectic
/// rows `mu,nu,X,w` when frames are given) to CSV. Returns 0.
int run_tomogram_command(const RunConfig& config, const CommandOverrides& = {});

/// Reconstruct the density matrix from the configured state's tomograms and
/// write it as `x,xp,re,im` CSV. Returns 0.
int run_reconstruct_command(const RunConfig& config,
                            const CommandOverrides& = {});

struct ValidateArgs {
  std::string data_path;
  std::vector<double> pair_thetas;  // empty: auto-pair every angle present
  std::vector<double> q_grid{0.5};
  double norm_tol = 1e-2;
  double margin_tol = 1e-3;
  std::string out_path;
  OutputFormat format = OutputFormat::json;
};

/// Ingest a measured tomogram CSV and check the conjugate-pair inequalities.
/// Returns 0 when all pass, 1 on a violation; ingestion problems throw
/// (exit 2 at the CLI boundary).
int run_validate_command(const ValidateArgs& args);

}  // namespace tomolab::cli
