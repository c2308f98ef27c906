// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "test_helpers.hpp"
#include "tomolab/cli/emit.hpp"
#include "tomolab/entropy.hpp"
#include "tomolab/gaussian.hpp"
#include "tomolab/inequalities.hpp"
#include "tomolab/tomography.hpp"

using namespace tomolab;
using namespace tomolab::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

void expect_near(double value, double target, double tol,
                 const std::string& label) {
  if (!(std::abs(value - target) <= tol)) {
    std::ostringstream msg;
    msg << std::setprecision(16) << label << ": " << value << " vs " << target
        << " (tol " << tol << ")";
    throw Failure(msg.str());
  }
}

std::vector<double> theta_grid_pi8() {
  std::vector<double> thetas;
  for (int k = 0; k <= 8; ++k) thetas.push_back(k * kPi / 8.0);
  return thetas;
}

const std::vector<double> kQGrid = {0.1, 0.3, 0.5, 0.7, 0.9};

// --- criterion bodies ------------------------------------------------------

void criterion_1_shannon_saturation() {
  for (double theta : theta_grid_pi8()) {
    const auto vac = check_optical_shannon(vacuum_state(), RotationAngle(theta));
    expect_near(vac.margin, 0.0, 1e-4, "vacuum Shannon margin");
  }
  const GaussianStateSpec squeezed = GaussianStateSpec::squeezed_vacuum(1.0);
  for (double theta : theta_grid_pi8()) {
    const auto report = check_optical_shannon(squeezed, RotationAngle(theta));
    expect(report.margin >= -1e-6, "squeezed margin must be nonnegative");
  }
  for (double theta : {0.0, kPi / 2}) {
    const auto report = check_optical_shannon(squeezed, RotationAngle(theta));
    expect_near(report.margin, 0.0, 1e-4, "squeezed principal-axis margin");
  }
}

void criterion_2_renyi_saturation() {
  for (double theta : {0.0, kPi / 5, kPi / 3}) {
    for (double q : kQGrid) {
      const auto report = check_optical_renyi(vacuum_state(),
                                              RotationAngle(theta),
                                              QParameter(q));
      expect_near(report.margin, 0.0, 1e-4, "vacuum Renyi margin (grid)");
    }
  }
  const auto closed = check_optical_renyi(GaussianStateSpec::vacuum(),
                                          RotationAngle(0.9), QParameter(0.5));
  expect_near(closed.lhs, kRenyiRhsHalf, 1e-6, "closed-form lhs at q=1/2");
  expect_near(closed.rhs, kRenyiRhsHalf, 1e-6, "closed-form rhs at q=1/2");
  expect_near(closed.margin, 0.0, 1e-12, "closed-form saturation");
}

void criterion_3_strict_inequality() {
  const auto shannon = check_shannon_position_momentum(one_photon_state(), 1);
  expect_near(shannon.margin, 0.541093, 1e-3, "one-photon Shannon margin");
  for (double theta : {0.0, kPi / 5, kPi / 3}) {
    for (double q : kQGrid) {
      const auto report = check_optical_renyi(one_photon_state(),
                                              RotationAngle(theta),
                                              QParameter(q));
      expect(report.margin > 0.0, "one-photon Renyi margin must be strict");
    }
  }
}

void criterion_4_homogeneity() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> radius(0.6, 1.8);
  const ModeGrid base = ModeGrid::standard();
  const std::vector<OneModeState> states = {vacuum_state(), one_photon_state(),
                                            plus_state()};
  for (const auto& state : states) {
    for (int trial = 0; trial < 3; ++trial) {
      const double th = angle(rng);
      const double r = radius(rng);
      const SymplecticFrame frame(r * std::cos(th), r * std::sin(th));
      const SampledDensity w = symplectic_tomogram(state, frame, base);
      for (double lambda : {0.5, 2.0, 3.0}) {
        const SampledDensity scaled = symplectic_tomogram(
            state, frame.scaled(lambda), base.scaled(lambda));
        const double diff =
            (scaled.weights() - w.weights() / lambda).abs().maxCoeff();
        expect(diff <= 1e-6, "homogeneity defect above 1e-6");
      }
    }
  }
}

void criterion_5_scaling_law() {
  const std::vector<OneModeState> states = {vacuum_state(), one_photon_state(),
                                            plus_state()};
  const RotationAngle theta(0.35);
  for (const auto& state : states) {
    std::vector<double> offsets;
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
      offsets.push_back(entropy_scaling_offset(state, theta, r));
    }
    const auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
    expect(*hi - *lo <= 1e-5, "scaling offset varies with r beyond 1e-5");
  }
  expect_near(entropy_scaling_offset(vacuum_state(), theta, 1.0), kHalfLnPiE,
              1e-5, "vacuum scaling offset");
}

void criterion_6_multimode() {
  const std::vector<SymplecticFrame> frames = {SymplecticFrame(1.0, 0.0),
                                               SymplecticFrame(1.0, 0.0)};
  const MultimodeProductState two_vac({vacuum_state(), vacuum_state()});
  const auto grid_report = check_multimode_renyi(two_vac, frames,
                                                 QParameter(0.5),
                                                 TomogramVariant::optical);
  expect_near(grid_report.margin, 0.0, 1e-3, "two-mode vacuum margin");
  expect_near(grid_report.rhs, 4.199002276583239, 1e-9,
              "two-mode rhs at q=1/2");

  const auto tmsv = GaussianStateSpec::two_mode_squeezed_vacuum(1.0);
  const std::vector<std::vector<double>> angle_sets = {{0.0, 0.0}, {0.3, -0.3}};
  for (const auto& thetas : angle_sets) {
    std::vector<SymplecticFrame> f;
    for (double t : thetas) f.emplace_back(std::cos(t), std::sin(t));
    const auto closed = check_multimode_renyi(tmsv, f, QParameter(0.5),
                                              TomogramVariant::optical);
    expect_near(closed.margin, 0.0, 1e-10, "TMSV closed-form margin");
  }
}

void criterion_7_q_to_zero() {
  expect_near(renyi_rhs(QParameter(1e-3), 1), kLnPiE, 1e-5,
              "renyi_rhs q->0 limit");
  for (const OneModeState& state : {OneModeState(vacuum_state()),
                                   OneModeState(one_photon_state())}) {
    const auto renyi =
        check_optical_renyi(state, RotationAngle(0.0), QParameter(1e-3));
    const auto shannon = check_optical_shannon(state, RotationAngle(0.0));
    expect_near(renyi.lhs, shannon.lhs, 5e-3, "B4 lhs vs Shannon lhs at q=1e-3");
  }
}

void criterion_8_reconstruction() {
  const ModeGrid grid = centered_grid(8.0, 201);
  const std::vector<FockSuperposition> states = {vacuum_state(),
                                                 one_photon_state(),
                                                 plus_state()};
  for (const auto& state : states) {
    const FockTomogramSource source(state, ModeGrid::standard());
    const DensityMatrix rho = reconstruct_density(source, grid);
    const GridWavefunction psi = sample_wavefunction(state, grid);
    expect(fidelity(psi, rho) >= 0.99, "round-trip fidelity below 0.99");
    expect((rho.elements() - rho.elements().adjoint()).cwiseAbs().maxCoeff() <=
               1e-8,
           "reconstructed matrix not Hermitian within 1e-8");
    expect_near(rho.trace(), 1.0, 1e-12, "reconstructed trace");
  }
}

void criterion_9_von_neumann() {
  const ModeGrid grid = centered_grid(8.0, 257);
  for (const auto& state : {vacuum_state(), one_photon_state(), plus_state()}) {
    const DensityMatrix rho =
        pure_density_matrix(sample_wavefunction(state, grid));
    expect(von_neumann_entropy(rho).nats <= 1e-6,
           "pure-state von Neumann entropy above 1e-6");
  }
  const DensityMatrix mixture = fock_mixture({0.5, 0.5}, grid);
  expect_near(von_neumann_entropy(mixture).nats, std::log(2.0), 1e-4,
              "two-projector mixture entropy");
}

void criterion_10_path_consistency() {
  std::mt19937 rng(77);
  const ModeGrid grid = ModeGrid::standard();
  std::vector<FockSuperposition> states = {vacuum_state(), plus_state(),
                                           random_superposition(rng, 5)};
  for (const auto& state : states) {
    const GridWavefunction psi = sample_wavefunction(state, grid);
    for (double theta : {kPi / 8, 3 * kPi / 8, 5 * kPi / 8}) {
      const SampledDensity fock_path =
          optical_tomogram(state, RotationAngle(theta), grid);
      const GridWavefunction kernel = quadrature_rotate(psi, RotationAngle(theta));
      const double diff =
          (fock_path.weights() - kernel.probability()).abs().maxCoeff();
      expect(diff <= 1e-6, "Fock-phase and kernel paths disagree beyond 1e-6");
    }
  }

  const std::vector<std::pair<FockSuperposition, GaussianStateSpec>> pairs = {
      {vacuum_state(), GaussianStateSpec::vacuum()},
      {coherent_state(1.0),
       GaussianStateSpec((Eigen::VectorXd(2) << std::sqrt(2.0), 0.0).finished(),
                         0.5 * Eigen::MatrixXd::Identity(2, 2))}};
  for (const auto& [fock, gauss] : pairs) {
    for (double theta : {0.0, 0.7}) {
      const SampledDensity w = optical_tomogram(fock, RotationAngle(theta), grid);
      const auto projected =
          projected_covariance(gauss, SymplecticFrame::optical(RotationAngle(theta)));
      expect_near(shannon_entropy(w).nats,
                  gaussian_shannon_entropy(projected).nats, 1e-6,
                  "grid entropy vs Gaussian oracle");
      expect_near(renyi_integral(w, 2.0), gaussian_renyi_integral(projected, 2.0),
                  1e-6, "grid Renyi integral vs Gaussian oracle");
    }
  }
}

// --- CLI contract -----------------------------------------------------------

fs::path work_dir() {
  const auto dir = fs::temp_directory_path() / "tomolab_acceptance";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string command =
      std::string(TOMOLAB_BIN) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  expect(status != -1, "failed to launch the CLI");
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  expect(in.good(), "missing output file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_gaussian_pair_dataset(const std::string& name, double variance,
                                     double scale_theta0) {
  const ModeGrid grid = ModeGrid::standard();
  const Eigen::ArrayXd x = grid.points();
  std::vector<cli::TomogramRow> rows;
  for (double theta : {0.0, kPi / 2}) {
    Eigen::ArrayXd w = (-x.square() / (2.0 * variance)).exp() /
                       std::sqrt(2.0 * kPi * variance);
    const SampledDensity density =
        SampledDensity::from_unnormalized({grid}, std::move(w));
    const double scale = theta == 0.0 ? scale_theta0 : 1.0;
    for (int i = 0; i < grid.size(); ++i) {
      rows.push_back(
          cli::TomogramRow{{theta}, grid.point(i), scale * density.weights()[i]});
    }
  }
  const fs::path path = work_dir() / name;
  cli::write_tomogram_csv(path.string(), false, rows);
  return path;
}

void criterion_11_cli_contract() {
  const fs::path clean =
      write_gaussian_pair_dataset("accept_vacuum.csv", 0.5, 1.0);
  expect(run_cli("validate --data " + clean.string()) == 0,
         "clean vacuum dataset must exit 0");

  const fs::path scaled =
      write_gaussian_pair_dataset("accept_scaled.csv", 0.5, 0.8);
  expect(run_cli("validate --data " + scaled.string()) == 2,
         "normalization-broken dataset must exit 2");

  const fs::path narrow =
      write_gaussian_pair_dataset("accept_narrow.csv", 0.05, 1.0);
  expect(run_cli("validate --data " + narrow.string()) == 1,
         "over-concentrated dataset must exit 1");

  // Determinism: identical configs, byte-identical reports.
  const fs::path config = work_dir() / "accept_config.json";
  const fs::path report_a = work_dir() / "accept_a.json";
  const fs::path report_b = work_dir() / "accept_b.json";
  {
    std::ofstream out(config);
    out << R"({
  "state": {"kind": "fock", "coefficients": [[0.8, 0], [0, 0.6]]},
  "checks": ["optical_renyi"],
  "theta": {"start": 0, "stop": 1.5, "count": 3},
  "q": {"values": [0.25, 0.75]}
})";
  }
  expect(run_cli("check --config " + config.string() + " --out " +
                 report_a.string()) == 0,
         "check command must exit 0 for a physical state");
  expect(run_cli("check --config " + config.string() + " --out " +
                 report_b.string()) == 0,
         "repeat run must exit 0");
  expect(slurp(report_a) == slurp(report_b),
         "identical configs must produce byte-identical reports");
  expect(!slurp(report_a).empty(), "report file must not be empty");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"1 Gaussian Shannon saturation (vacuum + squeezed)",
       criterion_1_shannon_saturation},
      {"2 Gaussian Renyi saturation (grid + closed form)",
       criterion_2_renyi_saturation},
      {"3 strict inequality for the one-photon state",
       criterion_3_strict_inequality},
      {"4 tomogram homogeneity", criterion_4_homogeneity},
      {"5 entropy scaling law", criterion_5_scaling_law},
      {"6 multimode bounds (product + TMSV)", criterion_6_multimode},
      {"7 q -> 0 limit", criterion_7_q_to_zero},
      {"8 density-matrix reconstruction round trip", criterion_8_reconstruction},
      {"9 von Neumann entropy", criterion_9_von_neumann},
      {"10 path consistency (Fock/kernel, grid/oracle)",
       criterion_10_path_consistency},
      {"11 CLI contract (exit codes + determinism)", criterion_11_cli_contract},
  };

  int failures = 0;
  for (const auto& [name, body] : criteria) {
    try {
      body();
      std::cout << "PASS  criterion " << name << "\n";
    } catch (const std::exception& err) {
      ++failures;
      std::cout << "FAIL  criterion " << name << ": " << err.what() << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failing\n";
    return 1;
  }
  std::cout << "all acceptance criteria pass\n";
  return 0;
}
