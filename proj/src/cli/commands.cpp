#include "tomolab/cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "tomolab/cli/emit.hpp"
#include "tomolab/tomography.hpp"

namespace tomolab::cli {

namespace {

RunConfig with_overrides(RunConfig config, const CommandOverrides& overrides) {
  if (overrides.out) config.output_path = *overrides.out;
  if (overrides.format) config.format = *overrides.format;
  if (overrides.tolerance) {
    if (!(*overrides.tolerance > 0.0)) {
      throw InvalidInputError("--tol must be positive");
    }
    config.tolerance = *overrides.tolerance;
  }
  return config;
}

CheckOptions options_from(const RunConfig& config) {
  CheckOptions opts;
  opts.grid = config.grid;
  opts.tolerance_override = config.tolerance;
  opts.frame_radius = config.frame_radius;
  return opts;
}

OneModeState one_mode_state(const State& state) {
  if (const auto* fock = std::get_if<FockSuperposition>(&state)) return *fock;
  if (const auto* psi = std::get_if<GridWavefunction>(&state)) return *psi;
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    if (gauss->n_modes() != 1) {
      throw WrongArityError("this command needs a one-mode state");
    }
    return *gauss;
  }
  throw WrongArityError("this command needs a one-mode state");
}

int exit_code_for(const std::vector<InequalityReport>& reports) {
  for (const InequalityReport& r : reports) {
    if (!r.satisfied) return 1;
  }
  return 0;
}

}  // namespace

int run_check_command(const RunConfig& raw_config,
                      const CommandOverrides& overrides) {
  const RunConfig config = with_overrides(raw_config, overrides);
  if (config.checks.empty()) {
    throw InvalidInputError("check: config lists no checks");
  }
  const CheckOptions opts = options_from(config);

  std::vector<InequalityReport> reports;
  const bool multimode = n_modes(config.state) > 1;
  if (!multimode) {
    std::vector<CheckKind> kinds;
    for (const std::string& name : config.checks) {
      if (is_multimode_check(name)) {
        throw InvalidInputError("check: " + name + " needs a multimode state");
      }
      kinds.push_back(check_kind_from_name(name));
    }
    reports = sweep_reports(one_mode_state(config.state), config.thetas,
                            config.qs, kinds, opts);
  } else {
    for (const std::string& name : config.checks) {
      if (name == "shannon_position_momentum") {
        reports.push_back(check_shannon_position_momentum(
            config.state, n_modes(config.state), opts));
        continue;
      }
      if (!is_multimode_check(name)) {
        throw InvalidInputError("check: " + name +
                                " is a one-mode check; state is multimode");
      }
      if (config.frames.empty()) {
        throw InvalidInputError(
            "check: multimode checks need \"frames\" in the config");
      }
      const TomogramVariant variant = name == "multimode_renyi_optical"
                                          ? TomogramVariant::optical
                                          : TomogramVariant::symplectic;
      for (double q : config.qs) {
        reports.push_back(check_multimode_renyi(config.state, config.frames,
                                                QParameter(q), variant, opts));
      }
    }
  }

  write_reports(config.output_path, config.format, reports);
  std::cout << "wrote " << reports.size() << " report(s) to "
            << config.output_path << "\n";
  return exit_code_for(reports);
}

int run_tomogram_command(const RunConfig& raw_config,
                         const CommandOverrides& overrides) {
  const RunConfig config = with_overrides(raw_config, overrides);
  const OneModeState state = one_mode_state(config.state);

  std::vector<TomogramRow> rows;
  const bool symplectic = !config.frames.empty();
  if (symplectic) {
    for (const SymplecticFrame& frame : config.frames) {
      const SampledDensity w = symplectic_tomogram(state, frame, config.grid);
      for (int i = 0; i < config.grid.size(); ++i) {
        rows.push_back(
            TomogramRow{{frame.mu, frame.nu}, config.grid.point(i), w.weights()[i]});
      }
    }
  } else {
    for (double theta : config.thetas) {
      const SampledDensity w =
          optical_tomogram(state, RotationAngle(theta), config.grid);
      const ModeGrid& grid = w.axis();
      for (int i = 0; i < grid.size(); ++i) {
        rows.push_back(TomogramRow{{theta}, grid.point(i), w.weights()[i]});
      }
    }
  }
  write_tomogram_csv(config.output_path, symplectic, rows);
  std::cout << "wrote " << rows.size() << " tomogram row(s) to "
            << config.output_path << "\n";
  return 0;
}

int run_reconstruct_command(const RunConfig& raw_config,
                            const CommandOverrides& overrides) {
  const RunConfig config = with_overrides(raw_config, overrides);
  const OneModeState state = one_mode_state(config.state);
  const auto source = make_tomogram_source(state, ModeGrid::standard());
  const DensityMatrix rho = reconstruct_density(*source, config.grid,
                                                config.mu_cutoff,
                                                config.mu_points);
  write_density_matrix_csv(config.output_path, rho);
  std::cout << "wrote " << config.grid.size() << "x" << config.grid.size()
            << " density matrix to " << config.output_path
            << " (trace " << format_g17(rho.trace()) << ")\n";
  return 0;
}

int run_validate_command(const ValidateArgs& args) {
  const MeasuredTomogramDataset dataset =
      MeasuredTomogramDataset::load_csv(args.data_path, args.norm_tol);

  std::vector<std::pair<double, double>> pairs;
  if (args.pair_thetas.empty()) {
    pairs = dataset.conjugate_pairs();
  } else {
    for (double theta : args.pair_thetas) {
      // Both angles must be present; at_angle throws when one is missing.
      const double partner = theta + std::numbers::pi / 2.0;
      pairs.emplace_back(dataset.at_angle(theta).theta,
                         dataset.at_angle(partner).theta);
    }
  }
  const std::vector<InequalityReport> reports =
      validate_measured_tomogram(dataset, pairs, args.q_grid, args.margin_tol);

  if (!args.out_path.empty()) {
    write_reports(args.out_path, args.format, reports);
  }
  int violations = 0;
  double worst = 0.0;
  for (const InequalityReport& r : reports) {
    if (!r.satisfied) ++violations;
    worst = std::min(worst, r.margin);
  }
  std::cout << "checked " << pairs.size() << " conjugate pair(s), "
            << reports.size() << " report(s), " << violations
            << " violation(s); min margin " << format_g17(worst) << "\n";
  return violations == 0 ? 0 : 1;
}

}  // namespace tomolab::cli
