#include "tomolab/entropy.hpp"

#include <cmath>
#include <numbers>

#include "tomolab/gaussian.hpp"
#include "tomolab/tomography.hpp"

namespace tomolab {

namespace {

constexpr double kZeroWeight = 1e-300;  // below this, w ln w counts as 0

EntropyValue masked_entropy(const Eigen::ArrayXd& w, const Eigen::ArrayXd& qw) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] > kZeroWeight) acc -= qw[i] * w[i] * std::log(w[i]);
  }
  return EntropyValue(acc);
}

SampledDensity marginal_from_diagonal(const ModeGrid& grid,
                                      Eigen::ArrayXd diag) {
  // Reconstructed matrices carry harmless sub-tolerance negatives on the
  // diagonal; anything worse is a physicality failure.
  if (diag.minCoeff() < -1e-8) {
    throw NonphysicalMatrixError(
        "marginal density: diagonal entry below -1e-8");
  }
  diag = diag.max(0.0);
  return SampledDensity::from_unnormalized({grid}, std::move(diag));
}

}  // namespace

EntropyValue shannon_entropy(const SampledDensity& density) {
  return masked_entropy(density.weights(), density.quadrature_weights());
}

double renyi_integral(const SampledDensity& density, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameterError("renyi_integral: alpha must be positive");
  }
  return (density.weights().pow(alpha) * density.quadrature_weights()).sum();
}

EntropyValue renyi_entropy(const SampledDensity& density, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameterError("renyi_entropy: alpha must be positive");
  }
  if (std::abs(alpha - 1.0) < 1e-12) {
    throw InvalidParameterError(
        "renyi_entropy: alpha = 1 is the Shannon limit; use shannon_entropy");
  }
  return EntropyValue(std::log(renyi_integral(density, alpha)) / (1.0 - alpha));
}

MarginalEntropies position_momentum_entropies(const GridWavefunction& psi) {
  const SampledDensity pos(psi.grid(), psi.probability());
  const SampledDensity mom(psi.grid(),
                           momentum_representation(psi).probability());
  return {shannon_entropy(pos), shannon_entropy(mom)};
}

MarginalEntropies position_momentum_entropies(const DensityMatrix& rho) {
  const ModeGrid& grid = rho.grid();
  const SampledDensity pos = marginal_from_diagonal(grid, rho.diagonal());

  // Fourier-conjugated diagonal: diag(F rho F^dagger) with
  // F(k,i) = (2 pi)^{-1/2} e^{-i p_k x_i} tw_i and p-grid = x-grid.
  const int n = grid.size();
  const Eigen::ArrayXd x = grid.points();
  const Eigen::ArrayXd tw = grid.trapezoid_weights();
  Eigen::MatrixXcd f(n, n);
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (int k = 0; k < n; ++k) {
    f.row(k) =
        (scale * tw *
         (Eigen::ArrayXcd(std::complex<double>(0.0, -x[k]) * x).exp()))
            .matrix()
            .transpose();
  }
  const Eigen::MatrixXcd frho = f * rho.elements();
  Eigen::ArrayXd mom_diag =
      (frho.array() * f.array().conjugate()).rowwise().sum().real();
  const SampledDensity mom = marginal_from_diagonal(grid, std::move(mom_diag));
  return {shannon_entropy(pos), shannon_entropy(mom)};
}

MarginalEntropies position_momentum_entropies(const GaussianStateSpec& state) {
  const int n = state.n_modes();
  std::vector<SymplecticFrame> q_frames(n, SymplecticFrame(1.0, 0.0));
  std::vector<SymplecticFrame> p_frames(n, SymplecticFrame(0.0, 1.0));
  return {gaussian_shannon_entropy(projected_covariance(state, q_frames)),
          gaussian_shannon_entropy(projected_covariance(state, p_frames))};
}

MarginalEntropies position_momentum_entropies(const FockSuperposition& state,
                                              const ModeGrid& grid) {
  return position_momentum_entropies(sample_wavefunction(state, grid));
}

MarginalEntropies position_momentum_entropies(const MultimodeProductState& state,
                                              const ModeGrid& axis_grid) {
  std::vector<ModeGrid> axes;
  std::vector<Eigen::ArrayXd> pos_factors;
  std::vector<Eigen::ArrayXd> mom_factors;
  for (const auto& factor : state.factors()) {
    const GridWavefunction psi = std::visit(
        [&](const auto& f) -> GridWavefunction {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, FockSuperposition>) {
            return sample_wavefunction(f, axis_grid);
          } else {
            return f;
          }
        },
        factor);
    axes.push_back(psi.grid());
    pos_factors.push_back(psi.probability());
    mom_factors.push_back(momentum_representation(psi).probability());
  }
  const SampledDensity pos(axes, tensor_product(pos_factors));
  const SampledDensity mom(axes, tensor_product(mom_factors));
  return {shannon_entropy(pos), shannon_entropy(mom)};
}

MarginalEntropies position_momentum_entropies(const State& state) {
  return std::visit(
      [](const auto& s) -> MarginalEntropies {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSuperposition>) {
          return position_momentum_entropies(s, ModeGrid::standard());
        } else if constexpr (std::is_same_v<T, MultimodeProductState>) {
          return position_momentum_entropies(
              s, ModeGrid::standard_multimode_axis());
        } else {
          return position_momentum_entropies(s);
        }
      },
      state);
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::VectorXd lambda = rho.spectrum();
  if (lambda.minCoeff() < -1e-6) {
    throw NonphysicalMatrixError(
        "von_neumann_entropy: eigenvalue below -1e-6");
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double v = std::min(std::max(lambda[i], 0.0), 1.0);
    if (v > kZeroWeight) acc -= v * std::log(v);
  }
  return EntropyValue(acc);
}

double entropy_scaling_offset(const OneModeState& state, RotationAngle theta,
                              double r, const ModeGrid& grid) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DegenerateFrameError("entropy_scaling_offset: requires r > 0");
  }
  const SymplecticFrame frame(r * std::cos(theta.radians()),
                              r * std::sin(theta.radians()));
  const SampledDensity w = symplectic_tomogram(state, frame, grid.scaled(r));
  return shannon_entropy(w).nats - std::log(r);
}

double entropy_scaling_offset(const OneModeState& state, RotationAngle theta,
                              double r) {
  return entropy_scaling_offset(state, theta, r, ModeGrid::standard());
}

}  // namespace tomolab
