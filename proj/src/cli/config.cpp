#include "tomolab/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tomolab::cli {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InvalidInputError("config: missing or non-numeric \"" + key + "\"");
  }
  return j[key].get<double>();
}

std::complex<double> parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InvalidInputError(
      "config: complex values are numbers or [re, im] pairs");
}

Eigen::VectorXcd parse_complex_vector(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InvalidInputError("config: expected a non-empty array");
  }
  Eigen::VectorXcd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[i] = parse_complex(j[i]);
  return v;
}

GridWavefunction load_grid_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("config: cannot open grid-state file " + path);
  }
  std::vector<double> xs;
  std::vector<std::complex<double>> samples;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "x,re,im") {
        throw InvalidInputError("grid-state file: expected header x,re,im");
      }
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    double x, re, im;
    char c1, c2;
    if (!(row >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
      throw InvalidInputError("grid-state file: malformed row: " + line);
    }
    xs.push_back(x);
    samples.emplace_back(re, im);
  }
  if (xs.size() < 16) {
    throw InvalidInputError("grid-state file: needs at least 16 rows");
  }
  const double dx = (xs.back() - xs.front()) / (double(xs.size()) - 1.0);
  for (size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - (xs.front() + double(i) * dx)) > 1e-9 * std::max(1.0, std::abs(xs[i]))) {
      throw InvalidInputError("grid-state file: x column is not uniform");
    }
  }
  ModeGrid grid(xs.front(), xs.back(), static_cast<int>(xs.size()));
  Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(samples.data(), samples.size());
  return GridWavefunction(grid, std::move(v));
}

State parse_state(const json& j);

SingleModeFactor parse_factor(const json& j) {
  const State s = parse_state(j);
  if (const auto* fock = std::get_if<FockSuperposition>(&s)) return *fock;
  if (const auto* psi = std::get_if<GridWavefunction>(&s)) return *psi;
  throw InvalidInputError("config: product factors must be fock or grid states");
}

State parse_state(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InvalidInputError("config: state needs a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "fock") {
    if (!j.contains("coefficients")) {
      throw InvalidInputError("config: fock state needs \"coefficients\"");
    }
    return FockSuperposition(parse_complex_vector(j["coefficients"]));
  }
  if (kind == "gaussian") {
    if (!j.contains("mean") || !j.contains("cov")) {
      throw InvalidInputError("config: gaussian state needs \"mean\" and \"cov\"");
    }
    const json& jm = j["mean"];
    const json& jc = j["cov"];
    if (!jm.is_array() || !jc.is_array()) {
      throw InvalidInputError("config: gaussian mean/cov must be arrays");
    }
    Eigen::VectorXd mean(jm.size());
    for (size_t i = 0; i < jm.size(); ++i) {
      if (!jm[i].is_number()) throw InvalidInputError("config: bad mean entry");
      mean[i] = jm[i].get<double>();
    }
    Eigen::MatrixXd cov(jc.size(), jc.size());
    for (size_t i = 0; i < jc.size(); ++i) {
      if (!jc[i].is_array() || jc[i].size() != jc.size()) {
        throw InvalidInputError("config: cov must be a square matrix");
      }
      for (size_t k = 0; k < jc[i].size(); ++k) {
        if (!jc[i][k].is_number()) throw InvalidInputError("config: bad cov entry");
        cov(i, k) = jc[i][k].get<double>();
      }
    }
    return GaussianStateSpec(std::move(mean), std::move(cov));
  }
  if (kind == "grid") {
    if (!j.contains("path") || !j["path"].is_string()) {
      throw InvalidInputError("config: grid state needs \"path\"");
    }
    return load_grid_state(j["path"].get<std::string>());
  }
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() ||
        j["factors"].empty()) {
      throw InvalidInputError("config: product state needs \"factors\"");
    }
    std::vector<SingleModeFactor> factors;
    for (const auto& f : j["factors"]) factors.push_back(parse_factor(f));
    return MultimodeProductState(std::move(factors));
  }
  throw InvalidInputError("config: unknown state kind \"" + kind + "\"");
}

const std::set<std::string> kKnownChecks = {
    "shannon_position_momentum", "optical_shannon", "optical_renyi",
    "symplectic_renyi", "multimode_renyi_optical", "multimode_renyi_symplectic"};

}  // namespace

CheckKind check_kind_from_name(const std::string& name) {
  if (name == "shannon_position_momentum") {
    return CheckKind::shannon_position_momentum;
  }
  if (name == "optical_shannon") return CheckKind::optical_shannon;
  if (name == "optical_renyi") return CheckKind::optical_renyi;
  if (name == "symplectic_renyi") return CheckKind::symplectic_renyi;
  throw InvalidInputError("config: \"" + name + "\" is not a one-mode check");
}

bool is_multimode_check(const std::string& name) {
  return name == "multimode_renyi_optical" || name == "multimode_renyi_symplectic";
}

RunConfig parse_run_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& err) {
    throw InvalidInputError(std::string("config: JSON parse error: ") +
                            err.what());
  }
  if (!j.is_object()) throw InvalidInputError("config: top level must be an object");

  RunConfig cfg;
  if (!j.contains("state")) {
    throw InvalidInputError("config: missing \"state\"");
  }
  cfg.state = parse_state(j["state"]);

  if (j.contains("grid")) {
    const json& g = j["grid"];
    cfg.grid = ModeGrid(require_number(g, "xmin"), require_number(g, "xmax"),
                        static_cast<int>(require_number(g, "points")));
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) {
      throw InvalidInputError("config: \"checks\" must be an array of names");
    }
    for (const auto& c : j["checks"]) {
      if (!c.is_string() || !kKnownChecks.contains(c.get<std::string>())) {
        throw InvalidInputError("config: unknown check name");
      }
      cfg.checks.push_back(c.get<std::string>());
    }
  }
  if (j.contains("theta")) {
    const json& t = j["theta"];
    const double start = require_number(t, "start");
    const double stop = require_number(t, "stop");
    const int count = static_cast<int>(require_number(t, "count"));
    if (count < 1) throw InvalidInputError("config: theta count must be >= 1");
    cfg.thetas.clear();
    for (int i = 0; i < count; ++i) {
      cfg.thetas.push_back(count == 1
                               ? start
                               : start + (stop - start) * i / (count - 1));
    }
  }
  if (j.contains("q")) {
    const json& q = j["q"];
    if (!q.contains("values") || !q["values"].is_array() || q["values"].empty()) {
      throw InvalidInputError("config: \"q\" needs a non-empty \"values\" array");
    }
    cfg.qs.clear();
    for (const auto& v : q["values"]) {
      if (!v.is_number()) throw InvalidInputError("config: bad q value");
      cfg.qs.push_back(v.get<double>());
    }
  }
  if (j.contains("frames")) {
    if (!j["frames"].is_array()) {
      throw InvalidInputError("config: \"frames\" must be an array of [mu, nu]");
    }
    for (const auto& f : j["frames"]) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number() || !f[1].is_number()) {
        throw InvalidInputError("config: frames entries are [mu, nu] pairs");
      }
      cfg.frames.emplace_back(f[0].get<double>(), f[1].get<double>());
    }
  }
  if (j.contains("r")) {
    if (!j["r"].is_number()) throw InvalidInputError("config: \"r\" must be a number");
    cfg.frame_radius = j["r"].get<double>();
    if (!(cfg.frame_radius > 0.0)) {
      throw InvalidInputError("config: \"r\" must be positive");
    }
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) {
      throw InvalidInputError("config: \"tolerance\" must be a number");
    }
    cfg.tolerance = j["tolerance"].get<double>();
    if (!(*cfg.tolerance > 0.0)) {
      throw InvalidInputError("config: \"tolerance\" must be positive");
    }
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw InvalidInputError("config: bad output path");
      cfg.output_path = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
      if (f == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (f == "json") {
        cfg.format = OutputFormat::json;
      } else {
        throw InvalidInputError("config: output format must be csv or json");
      }
    }
  }
  if (j.contains("reconstruction")) {
    const json& r = j["reconstruction"];
    if (r.contains("mu_cutoff")) cfg.mu_cutoff = require_number(r, "mu_cutoff");
    if (r.contains("mu_points")) {
      cfg.mu_points = static_cast<int>(require_number(r, "mu_points"));
    }
  }
  return cfg;
}

RunConfig parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("config: cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config_text(buffer.str());
}

}  // namespace tomolab::cli
