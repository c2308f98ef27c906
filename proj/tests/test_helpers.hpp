#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tomolab/entropy.hpp"
#include "tomolab/states.hpp"
#include "tomolab/tomography.hpp"
#include "tomolab/transforms.hpp"

namespace tomolab::testing {

// Frozen oracle values. Closed forms evaluated at 25-digit precision with
// an independent arbitrary-precision tool and cross-checked against
// high-node quadrature before being frozen here.
inline constexpr double kPhi0At0 = 0.75112554446494248;       // pi^(-1/4)
inline constexpr double kPhi1At1 = 0.64428836511347518;       // sqrt2 pi^(-1/4) e^(-1/2)
inline constexpr double kRho00 = 0.56418958354775629;         // pi^(-1/2)
inline constexpr double kHalfLnPiE = 1.0723649429247001;
inline constexpr double kLnPiE = 2.1447298858494002;
inline constexpr double kOnePhotonEntropy = 1.3427277883861783;
// 3/2 - ln(2/sqrt(pi)) - digamma(3/2); quadrature-verified
inline constexpr double kOnePhotonShannonMargin = 0.54072569092295634;
inline constexpr double kVacRenyiIntAlpha2 = 0.39894228040143268;   // (2pi)^(-1/2)
inline constexpr double kVacRenyiIntAlpha23 = 1.4821902142917706;   // pi^(1/6) sqrt(3/2)
inline constexpr double kVacRenyiEntropy2 = 0.91893853320467274;    // ln(2pi)/2
inline constexpr double kRenyiRhsHalf = 2.0995011382916194;         // q=1/2, N=1
inline constexpr double kLnCosh2 = 1.3250027473578644;
inline constexpr double kSqueezedSx = 2.0723649429247001;
inline constexpr double kSqueezedSp = 0.072364942924700087;
inline constexpr double kThermalEntropyN30 = 1.0406518522553053;

inline FockSuperposition vacuum_state() { return FockSuperposition::vacuum(); }

inline FockSuperposition one_photon_state() {
  return FockSuperposition::fock(1);
}

// (|0> + |1>)/sqrt(2)
inline FockSuperposition plus_state() {
  Eigen::VectorXcd c(2);
  c << 1.0, 1.0;
  return FockSuperposition(std::move(c));
}

inline FockSuperposition random_superposition(std::mt19937& rng, int n_max) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd c(n_max + 1);
  for (int i = 0; i <= n_max; ++i) c[i] = {normal(rng), normal(rng)};
  return FockSuperposition(std::move(c));
}

// Coherent state |alpha> (alpha real) truncated at n_max, <q> = sqrt(2) alpha.
inline FockSuperposition coherent_state(double alpha, int n_max = 24) {
  Eigen::VectorXcd c(n_max + 1);
  double term = 1.0;
  c[0] = term;
  for (int n = 1; n <= n_max; ++n) {
    term *= alpha / std::sqrt(double(n));
    c[n] = term;
  }
  return FockSuperposition(std::move(c));  // constructor renormalizes
}

// Diagonal Fock mixture sum_n p_n |phi_n><phi_n| discretized on the grid.
inline DensityMatrix fock_mixture(const std::vector<double>& probabilities,
                                  const ModeGrid& grid) {
  const int n_max = static_cast<int>(probabilities.size()) - 1;
  const Eigen::MatrixXd basis = hermite_basis(n_max, grid.points());
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(grid.size(), grid.size());
  for (int n = 0; n <= n_max; ++n) {
    // Normalize each projector on the grid so the discrete trace is exact.
    const Eigen::VectorXd phi = basis.row(n);
    const double norm2 =
        (phi.array().square() * grid.trapezoid_weights()).sum();
    rho += (probabilities[n] / norm2) * (phi * phi.transpose());
  }
  return DensityMatrix(grid, rho.cast<std::complex<double>>());
}

// Odd-point symmetric grid with an exact node at x = 0.
inline ModeGrid centered_grid(double half_width, int n_points) {
  return ModeGrid(-half_width, half_width, n_points);
}

inline int center_index(const ModeGrid& grid) {
  return (grid.size() - 1) / 2;
}

}  // namespace tomolab::testing
