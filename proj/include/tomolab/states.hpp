#pragma once

#include <Eigen/Core>
#include <complex>
#include <variant>
#include <vector>

#include "tomolab/errors.hpp"
#include "tomolab/grid.hpp"

namespace tomolab {

/// Pure state as a finite superposition of oscillator number states.
/// Construction normalizes the coefficient vector; an all-zero input is an
/// InvalidStateError.
class FockSuperposition {
 public:
  static constexpr int kMaxPhotonNumber = 64;

  explicit FockSuperposition(Eigen::VectorXcd coefficients);

  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  int max_photon_number() const { return static_cast<int>(coeffs_.size()) - 1; }

  static FockSuperposition vacuum() {
    return FockSuperposition(Eigen::VectorXcd::Ones(1));
  }
  static FockSuperposition fock(int n);

 private:
  Eigen::VectorXcd coeffs_;
};

/// Pure state sampled on a uniform grid, kept at unit trapezoid norm.
class GridWavefunction {
 public:
  GridWavefunction(ModeGrid grid, Eigen::VectorXcd samples);

  const ModeGrid& grid() const { return grid_; }
  const Eigen::VectorXcd& samples() const { return samples_; }

  /// |psi(x_i)|^2 as an array.
  Eigen::ArrayXd probability() const { return samples_.array().abs2(); }

 private:
  ModeGrid grid_;
  Eigen::VectorXcd samples_;
};

/// Gaussian state of N modes: mean vector (q1,p1,...,qN,pN) and symmetric
/// 2N x 2N covariance matrix V (hbar = 1, vacuum variance 1/2).
/// Construction checks symmetry and the uncertainty condition
/// V + (i/2) Omega >= 0 (all eigenvalues >= -1e-10).
class GaussianStateSpec {
 public:
  GaussianStateSpec(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  int n_modes() const { return n_modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }

  /// Purity test: det V = 4^{-N} within tol.
  bool is_pure(double tol = 1e-9) const;

  static GaussianStateSpec vacuum(int n_modes = 1);
  /// One-mode squeezed vacuum with variances e^{2r}/2 (q) and e^{-2r}/2 (p).
  static GaussianStateSpec squeezed_vacuum(double squeeze);
  /// Two-mode squeezed vacuum with q-q correlation +sinh(2r)/2 and p-p
  /// correlation -sinh(2r)/2 (EPR convention).
  static GaussianStateSpec two_mode_squeezed_vacuum(double squeeze);

 private:
  int n_modes_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// Separable multimode pure state, a tensor product of one-mode factors.
using SingleModeFactor = std::variant<FockSuperposition, GridWavefunction>;

class MultimodeProductState {
 public:
  static constexpr int kMaxModes = 3;

  explicit MultimodeProductState(std::vector<SingleModeFactor> factors);

  int n_modes() const { return static_cast<int>(factors_.size()); }
  const std::vector<SingleModeFactor>& factors() const { return factors_; }

 private:
  std::vector<SingleModeFactor> factors_;
};

/// Grid-discretized density matrix rho(x_i, x_j). Construction checks
/// Hermiticity (1e-8), unit trace (1e-6) and positivity of rho*dx
/// (minimum eigenvalue >= -1e-6).
class DensityMatrix {
 public:
  DensityMatrix(ModeGrid grid, Eigen::MatrixXcd elements);

  const ModeGrid& grid() const { return grid_; }
  const Eigen::MatrixXcd& elements() const { return elements_; }

  double trace() const;
  /// rho(x_i, x_i) as a real array (the position marginal density).
  Eigen::ArrayXd diagonal() const;
  /// Eigenvalues of rho*dx in increasing order (the discrete spectrum).
  Eigen::VectorXd spectrum() const;

 private:
  ModeGrid grid_;
  Eigen::MatrixXcd elements_;
};

/// Any state accepted by the one-mode checkers.
using OneModeState =
    std::variant<FockSuperposition, GridWavefunction, GaussianStateSpec>;

/// Any state accepted by the multimode-aware checkers.
using State = std::variant<FockSuperposition, GridWavefunction,
                           GaussianStateSpec, MultimodeProductState>;

int n_modes(const State& state);

/// Sample a Fock superposition on a grid: psi(x_i) = sum_n c_n phi_n(x_i),
/// renormalized to unit trapezoid norm. The caller is responsible for a
/// grid wide enough that the truncated mass is negligible (< 1e-8 on the
/// standard grid for n <= 20).
GridWavefunction sample_wavefunction(const FockSuperposition& state,
                                     const ModeGrid& grid);

/// Rank-one density matrix psi(x_i) conj(psi(x_j)) of a pure state.
DensityMatrix pure_density_matrix(const GridWavefunction& psi);

}  // namespace tomolab
