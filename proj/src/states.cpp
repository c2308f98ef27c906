#include "tomolab/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tomolab/transforms.hpp"

namespace tomolab {

namespace {

// Standard symplectic form Omega = diag blocks [[0,1],[-1,0]] in
// (q1,p1,...,qN,pN) ordering.
Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

}  // namespace

FockSuperposition::FockSuperposition(Eigen::VectorXcd coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() == 0) {
    throw InvalidStateError("FockSuperposition: empty coefficient vector");
  }
  if (coeffs_.size() - 1 > kMaxPhotonNumber) {
    throw InvalidStateError("FockSuperposition: photon number cap is 64");
  }
  if (!coeffs_.allFinite()) {
    throw InvalidStateError("FockSuperposition: non-finite coefficient");
  }
  const double norm = coeffs_.norm();
  if (norm == 0.0) {
    throw InvalidStateError("FockSuperposition: all coefficients are zero");
  }
  coeffs_ /= norm;
}

FockSuperposition FockSuperposition::fock(int n) {
  if (n < 0 || n > kMaxPhotonNumber) {
    throw InvalidStateError("FockSuperposition::fock: n out of range");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[n] = 1.0;
  return FockSuperposition(std::move(c));
}

GridWavefunction::GridWavefunction(ModeGrid grid, Eigen::VectorXcd samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw InvalidInputError("GridWavefunction: sample count != grid size");
  }
  if (!samples_.allFinite()) {
    throw InvalidStateError("GridWavefunction: non-finite sample");
  }
  const double norm2 =
      (samples_.array().abs2() * grid_.trapezoid_weights()).sum();
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw InvalidStateError("GridWavefunction: zero-norm samples");
  }
  samples_ /= std::sqrt(norm2);
}

GaussianStateSpec::GaussianStateSpec(Eigen::VectorXd mean,
                                     Eigen::MatrixXd covariance)
    : mean_(std::move(mean)), cov_(std::move(covariance)) {
  if (mean_.size() == 0 || mean_.size() % 2 != 0) {
    throw InvalidInputError("GaussianStateSpec: mean must have length 2N");
  }
  n_modes_ = static_cast<int>(mean_.size()) / 2;
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw InvalidInputError("GaussianStateSpec: covariance must be 2N x 2N");
  }
  if (!mean_.allFinite() || !cov_.allFinite()) {
    throw InvalidInputError("GaussianStateSpec: non-finite entries");
  }
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidInputError("GaussianStateSpec: covariance not symmetric");
  }
  // Uncertainty condition: V + (i/2) Omega is Hermitian PSD.
  const std::complex<double> ihalf(0.0, 0.5);
  Eigen::MatrixXcd h =
      cov_.cast<std::complex<double>>() + ihalf * symplectic_form(n_modes_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw NonphysicalStateError(
        "GaussianStateSpec: covariance violates the uncertainty condition");
  }
}

bool GaussianStateSpec::is_pure(double tol) const {
  const double det = cov_.determinant();
  return std::abs(det - std::pow(4.0, -n_modes_)) <= tol;
}

GaussianStateSpec GaussianStateSpec::vacuum(int n_modes) {
  return GaussianStateSpec(
      Eigen::VectorXd::Zero(2 * n_modes),
      0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianStateSpec GaussianStateSpec::squeezed_vacuum(double squeeze) {
  Eigen::MatrixXd v(2, 2);
  v << std::exp(2.0 * squeeze) / 2.0, 0.0, 0.0, std::exp(-2.0 * squeeze) / 2.0;
  return GaussianStateSpec(Eigen::VectorXd::Zero(2), v);
}

GaussianStateSpec GaussianStateSpec::two_mode_squeezed_vacuum(double squeeze) {
  const double c = std::cosh(2.0 * squeeze) / 2.0;
  const double s = std::sinh(2.0 * squeeze) / 2.0;
  Eigen::MatrixXd v(4, 4);
  v << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return GaussianStateSpec(Eigen::VectorXd::Zero(4), v);
}

MultimodeProductState::MultimodeProductState(
    std::vector<SingleModeFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InvalidStateError("MultimodeProductState: no factors");
  }
  if (factors_.size() > kMaxModes) {
    throw InvalidStateError(
        "MultimodeProductState: tensor grids capped at 3 modes");
  }
}

DensityMatrix::DensityMatrix(ModeGrid grid, Eigen::MatrixXcd elements)
    : grid_(grid), elements_(std::move(elements)) {
  const int n = grid_.size();
  if (elements_.rows() != n || elements_.cols() != n) {
    throw InvalidInputError("DensityMatrix: element shape != grid size");
  }
  if (!elements_.allFinite()) {
    throw InvalidInputError("DensityMatrix: non-finite element");
  }
  const double herm_defect =
      (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-8) {
    throw InvalidInputError("DensityMatrix: not Hermitian within 1e-8");
  }
  if (std::abs(trace() - 1.0) > 1e-6) {
    throw InvalidInputError("DensityMatrix: trace differs from 1 beyond 1e-6");
  }
  if (spectrum().minCoeff() < -1e-6) {
    throw NonphysicalMatrixError(
        "DensityMatrix: eigenvalue below -1e-6, matrix is not positive");
  }
}

double DensityMatrix::trace() const {
  return elements_.diagonal().real().sum() * grid_.spacing();
}

Eigen::ArrayXd DensityMatrix::diagonal() const {
  return elements_.diagonal().real().array();
}

Eigen::VectorXd DensityMatrix::spectrum() const {
  Eigen::MatrixXcd scaled = elements_ * grid_.spacing();
  // Hermitize against representation noise before the eigensolve.
  scaled = 0.5 * (scaled + scaled.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(scaled,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

int n_modes(const State& state) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianStateSpec>) {
          return s.n_modes();
        } else if constexpr (std::is_same_v<T, MultimodeProductState>) {
          return s.n_modes();
        } else {
          return 1;
        }
      },
      state);
}

GridWavefunction sample_wavefunction(const FockSuperposition& state,
                                     const ModeGrid& grid) {
  const Eigen::MatrixXd basis =
      hermite_basis(state.max_photon_number(), grid.points());
  Eigen::VectorXcd samples =
      basis.transpose().cast<std::complex<double>>() * state.coefficients();
  return GridWavefunction(grid, std::move(samples));
}

DensityMatrix pure_density_matrix(const GridWavefunction& psi) {
  Eigen::MatrixXcd rho = psi.samples() * psi.samples().adjoint();
  return DensityMatrix(psi.grid(), std::move(rho));
}

}  // namespace tomolab
