// tomolab: optical/symplectic tomograms, tomographic entropies and
// entropic-uncertainty checks for continuous-variable quantum states.
//
// Exit codes: 0 all checks pass, 1 an inequality is violated, 2 invalid
// input (bad config, nonphysical state, malformed dataset).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tomolab/cli/commands.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw tomolab::InvalidInputError("cannot parse number list: " + text);
    }
  }
  if (values.empty()) {
    throw tomolab::InvalidInputError("empty number list: " + text);
  }
  return values;
}

tomolab::cli::OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return tomolab::cli::OutputFormat::csv;
  if (text == "json") return tomolab::cli::OutputFormat::json;
  throw tomolab::InvalidInputError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tomograms, tomographic entropies and uncertainty checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string data_path;
  std::string out_path;
  std::string format_text;
  std::string pairs_text;
  std::string q_text;
  double tol = -1.0;
  double margin_tol = -1.0;

  CLI::App* check = app.add_subcommand("check", "run configured inequality checks");
  check->add_option("--config", config_path, "JSON run configuration")->required();
  check->add_option("--out", out_path, "report file (overrides config)");
  check->add_option("--format", format_text, "csv or json (overrides config)");
  check->add_option("--tol", tol, "satisfaction tolerance (overrides config)");

  CLI::App* tomogram = app.add_subcommand("tomogram", "write tomograms as CSV");
  tomogram->add_option("--config", config_path, "JSON run configuration")->required();
  tomogram->add_option("--out", out_path, "CSV output (overrides config)");

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "reconstruct the density matrix");
  reconstruct->add_option("--config", config_path, "JSON run configuration")->required();
  reconstruct->add_option("--out", out_path, "CSV output (overrides config)");

  CLI::App* validate =
      app.add_subcommand("validate", "check a measured tomogram dataset");
  validate->add_option("--data", data_path, "tomogram CSV (theta,X,w)")->required();
  validate->add_option("--pairs", pairs_text,
                       "comma-separated theta values; each is paired with "
                       "theta+pi/2 (default: every available pair)");
  validate->add_option("--q", q_text, "comma-separated q values (default 0.5)");
  validate->add_option("--tol", tol, "normalization tolerance (default 1e-2)");
  validate->add_option("--margin-tol", margin_tol,
                       "margin tolerance for satisfaction (default 1e-3)");
  validate->add_option("--out", out_path, "report file");
  validate->add_option("--format", format_text, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version land here with a zero exit code; everything else
    // is invalid input.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tomolab::cli::CommandOverrides overrides;
    if (!out_path.empty()) overrides.out = out_path;
    if (!format_text.empty()) overrides.format = parse_format(format_text);
    if (tol > 0.0) overrides.tolerance = tol;

    if (check->parsed()) {
      return tomolab::cli::run_check_command(
          tomolab::cli::parse_run_config(config_path), overrides);
    }
    if (tomogram->parsed()) {
      return tomolab::cli::run_tomogram_command(
          tomolab::cli::parse_run_config(config_path), overrides);
    }
    if (reconstruct->parsed()) {
      return tomolab::cli::run_reconstruct_command(
          tomolab::cli::parse_run_config(config_path), overrides);
    }
    tomolab::cli::ValidateArgs args;
    args.data_path = data_path;
    if (!pairs_text.empty()) args.pair_thetas = parse_double_list(pairs_text);
    if (!q_text.empty()) args.q_grid = parse_double_list(q_text);
    if (tol > 0.0) args.norm_tol = tol;
    if (margin_tol > 0.0) args.margin_tol = margin_tol;
    args.out_path = out_path;
    if (!format_text.empty()) args.format = parse_format(format_text);
    return tomolab::cli::run_validate_command(args);
  } catch (const tomolab::TomolabError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
