#include "tomolab/tomography.hpp"

#include <cmath>
#include <numbers>

#include "tomolab/gaussian.hpp"

namespace tomolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::ArrayXcd phased_coefficients(const FockSuperposition& state,
                                    double theta) {
  const std::complex<double> minus_i(0.0, -1.0);
  Eigen::ArrayXcd coeffs = state.coefficients().array();
  for (int n = 0; n < coeffs.size(); ++n) {
    coeffs[n] *= std::exp(minus_i * (theta * n));
  }
  return coeffs;
}

// |sum_n c_n e^{-i n theta} phi_n(u)|^2 evaluated at arbitrary points.
Eigen::ArrayXd fock_tomogram_values(const FockSuperposition& state,
                                    double theta, const Eigen::ArrayXd& u) {
  const Eigen::MatrixXd basis = hermite_basis(state.max_photon_number(), u);
  const Eigen::ArrayXcd coeffs = phased_coefficients(state, theta);
  Eigen::VectorXcd psi =
      basis.transpose().cast<std::complex<double>>() * coeffs.matrix();
  return psi.array().abs2();
}

double linear_interpolate(const ModeGrid& grid, const Eigen::ArrayXd& values,
                          double u) {
  if (u < grid.x_min() || u > grid.x_max()) return 0.0;
  const double t = (u - grid.x_min()) / grid.spacing();
  const int j = static_cast<int>(t);
  if (j >= grid.size() - 1) return values[grid.size() - 1];
  const double frac = t - j;
  return values[j] * (1.0 - frac) + values[j + 1] * frac;
}

}  // namespace

SampledDensity optical_tomogram(const FockSuperposition& state,
                                RotationAngle theta, const ModeGrid& grid) {
  Eigen::ArrayXd w = fock_tomogram_values(state, theta.radians(), grid.points());
  return SampledDensity::from_unnormalized({grid}, std::move(w));
}

SampledDensity optical_tomogram(const GridWavefunction& psi,
                                RotationAngle theta) {
  const GridWavefunction rotated = quadrature_rotate(psi, theta);
  return SampledDensity(rotated.grid(), rotated.probability());
}

SampledDensity optical_tomogram(const GaussianStateSpec& state,
                                RotationAngle theta, const ModeGrid& grid) {
  if (state.n_modes() != 1) {
    throw WrongArityError("optical_tomogram: Gaussian state must be one-mode");
  }
  const ProjectedGaussian g =
      projected_covariance(state, SymplecticFrame::optical(theta));
  return SampledDensity::from_unnormalized({grid}, gaussian_density_on(g, {grid}));
}

SampledDensity optical_tomogram(const OneModeState& state, RotationAngle theta,
                                const ModeGrid& grid) {
  return std::visit(
      [&](const auto& s) -> SampledDensity {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GridWavefunction>) {
          return optical_tomogram(s, theta);
        } else {
          return optical_tomogram(s, theta, grid);
        }
      },
      state);
}

SampledDensity symplectic_tomogram(const OneModeState& state,
                                   const SymplecticFrame& frame,
                                   const ModeGrid& grid) {
  const double r = frame.radius();
  const double theta = frame.angle();

  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    if (gauss->n_modes() != 1) {
      throw WrongArityError("symplectic_tomogram: Gaussian state must be one-mode");
    }
    const ProjectedGaussian g = projected_covariance(*gauss, frame);
    return SampledDensity::from_unnormalized({grid},
                                             gaussian_density_on(g, {grid}));
  }
  if (const auto* fock = std::get_if<FockSuperposition>(&state)) {
    // Homogeneity: w(X, mu, nu) = (1/r) w_opt(X/r, theta), with w_opt
    // evaluated exactly at the scaled nodes.
    Eigen::ArrayXd w = fock_tomogram_values(*fock, theta, grid.points() / r) / r;
    return SampledDensity::from_unnormalized({grid}, std::move(w));
  }
  const auto& psi = std::get<GridWavefunction>(state);
  const SampledDensity opt = optical_tomogram(psi, RotationAngle(theta));
  Eigen::ArrayXd w(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    w[i] = linear_interpolate(opt.axis(), opt.weights(), grid.point(i) / r) / r;
  }
  return SampledDensity::from_unnormalized({grid}, std::move(w));
}

MultimodeTomogram multimode_tomogram(const MultimodeProductState& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes) {
  const int n = state.n_modes();
  if (static_cast<int>(frames.size()) != n) {
    throw WrongArityError("multimode_tomogram: one frame per mode required");
  }
  std::vector<ModeGrid> grids = axes;
  if (grids.empty()) {
    for (int k = 0; k < n; ++k) {
      grids.push_back(
          ModeGrid::standard_multimode_axis().scaled(frames[k].radius()));
    }
  }
  if (static_cast<int>(grids.size()) != n) {
    throw WrongArityError("multimode_tomogram: one axis per mode required");
  }
  std::vector<Eigen::ArrayXd> per_mode;
  per_mode.reserve(n);
  for (int k = 0; k < n; ++k) {
    const OneModeState factor = std::visit(
        [](const auto& f) -> OneModeState { return f; }, state.factors()[k]);
    per_mode.push_back(
        symplectic_tomogram(factor, frames[k], grids[k]).weights());
  }
  SampledDensity density(grids, tensor_product(per_mode));
  return MultimodeTomogram{{frames.begin(), frames.end()}, std::move(density)};
}

MultimodeTomogram multimode_tomogram(const GaussianStateSpec& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes) {
  const int n = state.n_modes();
  if (static_cast<int>(frames.size()) != n) {
    throw WrongArityError("multimode_tomogram: one frame per mode required");
  }
  if (n > 3) {
    throw WrongArityError("multimode_tomogram: tensor grids capped at 3 modes");
  }
  std::vector<ModeGrid> grids = axes;
  if (grids.empty()) {
    for (int k = 0; k < n; ++k) {
      grids.push_back(
          ModeGrid::standard_multimode_axis().scaled(frames[k].radius()));
    }
  }
  if (static_cast<int>(grids.size()) != n) {
    throw WrongArityError("multimode_tomogram: one axis per mode required");
  }
  const ProjectedGaussian g = projected_covariance(state, frames);
  SampledDensity density = SampledDensity::from_unnormalized(
      grids, gaussian_density_on(g, grids), 1e-3);
  return MultimodeTomogram{{frames.begin(), frames.end()}, std::move(density)};
}

MultimodeTomogram multimode_tomogram(const State& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes) {
  if (const auto* product = std::get_if<MultimodeProductState>(&state)) {
    return multimode_tomogram(*product, frames, axes);
  }
  if (const auto* gauss = std::get_if<GaussianStateSpec>(&state)) {
    return multimode_tomogram(*gauss, frames, axes);
  }
  // One-mode pure states are one-factor products.
  if (const auto* fock = std::get_if<FockSuperposition>(&state)) {
    return multimode_tomogram(MultimodeProductState({*fock}), frames, axes);
  }
  return multimode_tomogram(
      MultimodeProductState({std::get<GridWavefunction>(state)}), frames, axes);
}

std::complex<double> TomogramSource::characteristic(double mu, double nu) const {
  const double r = std::hypot(mu, nu);
  if (r < 1e-12) return 1.0;  // integral of a normalized density
  const SampledDensity w = optical(RotationAngle(std::atan2(nu, mu)));
  const Eigen::ArrayXd qw = w.quadrature_weights();
  const ModeGrid& g = w.axis();
  // sum_j qw_j w_j e^{i r u_j} by phase recurrence over the uniform grid.
  const std::complex<double> step =
      std::exp(std::complex<double>(0.0, r * g.spacing()));
  std::complex<double> phase =
      std::exp(std::complex<double>(0.0, r * g.x_min()));
  std::complex<double> acc = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    acc += qw[j] * w.weights()[j] * phase;
    phase *= step;
  }
  return acc;
}

FockTomogramSource::FockTomogramSource(FockSuperposition state, ModeGrid grid)
    : state_(std::move(state)),
      grid_(grid),
      basis_(hermite_basis(state_.max_photon_number(), grid.points())
                 .cast<std::complex<double>>()),
      quad_weights_(grid.trapezoid_weights()) {}

SampledDensity FockTomogramSource::optical(RotationAngle theta) const {
  Eigen::VectorXcd psi =
      basis_.transpose() * phased_coefficients(state_, theta.radians()).matrix();
  return SampledDensity::from_unnormalized({grid_}, psi.array().abs2());
}

std::complex<double> FockTomogramSource::characteristic(double mu,
                                                        double nu) const {
  const double r = std::hypot(mu, nu);
  if (r < 1e-12) return 1.0;
  const double theta = std::atan2(nu, mu);
  Eigen::VectorXcd psi =
      basis_.transpose() * phased_coefficients(state_, theta).matrix();
  const std::complex<double> step =
      std::exp(std::complex<double>(0.0, r * grid_.spacing()));
  std::complex<double> phase =
      std::exp(std::complex<double>(0.0, r * grid_.x_min()));
  std::complex<double> acc = 0.0;
  for (int j = 0; j < grid_.size(); ++j) {
    acc += quad_weights_[j] * std::norm(psi[j]) * phase;
    phase *= step;
  }
  return acc;
}

GaussianTomogramSource::GaussianTomogramSource(GaussianStateSpec state,
                                               ModeGrid grid)
    : state_(std::move(state)), grid_(grid) {
  if (state_.n_modes() != 1) {
    throw WrongArityError("GaussianTomogramSource: state must be one-mode");
  }
}

SampledDensity GaussianTomogramSource::optical(RotationAngle theta) const {
  return optical_tomogram(state_, theta, grid_);
}

std::complex<double> GaussianTomogramSource::characteristic(double mu,
                                                            double nu) const {
  // E[e^{iX}] of a normal X with the projected mean and variance.
  const Eigen::Vector2d f(mu, nu);
  const double mean = f.dot(state_.mean());
  const double var = f.dot(state_.covariance() * f);
  return std::exp(std::complex<double>(-0.5 * var, mean));
}

WavefunctionTomogramSource::WavefunctionTomogramSource(GridWavefunction psi)
    : psi_(std::move(psi)), quad_weights_(psi_.grid().trapezoid_weights()) {}

SampledDensity WavefunctionTomogramSource::optical(RotationAngle theta) const {
  return optical_tomogram(psi_, theta);
}

std::complex<double> WavefunctionTomogramSource::characteristic(
    double mu, double nu) const {
  const ModeGrid& g = psi_.grid();
  const Eigen::VectorXcd& samples = psi_.samples();

  // psi(x + nu) by cubic (4-point Lagrange) interpolation, zero outside the
  // grid; linear interpolation leaves ~1e-5 errors that push reconstructed
  // eigenvalues below the positivity tolerance.
  auto shifted = [&](int i) -> std::complex<double> {
    const double u = g.point(i) + nu;
    if (u < g.x_min() || u > g.x_max()) return 0.0;
    const double t = (u - g.x_min()) / g.spacing();
    int j = static_cast<int>(t);
    if (j >= g.size() - 1) return samples[g.size() - 1];
    const double s = t - j;
    if (j < 1 || j >= g.size() - 2) {
      return samples[j] * (1.0 - s) + samples[j + 1] * s;
    }
    const double wm1 = -s * (s - 1.0) * (s - 2.0) / 6.0;
    const double w0 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    const double w1 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    const double w2 = (s + 1.0) * s * (s - 1.0) / 6.0;
    return wm1 * samples[j - 1] + w0 * samples[j] + w1 * samples[j + 1] +
           w2 * samples[j + 2];
  };

  const std::complex<double> step =
      std::exp(std::complex<double>(0.0, mu * g.spacing()));
  std::complex<double> phase =
      std::exp(std::complex<double>(0.0, mu * g.x_min()));
  std::complex<double> acc = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    acc += quad_weights_[i] * std::conj(samples[i]) * phase * shifted(i);
    phase *= step;
  }
  return std::exp(std::complex<double>(0.0, 0.5 * mu * nu)) * acc;
}

std::unique_ptr<TomogramSource> make_tomogram_source(const OneModeState& state,
                                                     const ModeGrid& grid) {
  return std::visit(
      [&](const auto& s) -> std::unique_ptr<TomogramSource> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSuperposition>) {
          return std::make_unique<FockTomogramSource>(s, grid);
        } else if constexpr (std::is_same_v<T, GaussianStateSpec>) {
          return std::make_unique<GaussianTomogramSource>(s, grid);
        } else {
          return std::make_unique<WavefunctionTomogramSource>(s);
        }
      },
      state);
}

DensityMatrix reconstruct_density(const TomogramSource& source,
                                  const ModeGrid& grid, double mu_cutoff,
                                  int mu_points) {
  if (!(mu_cutoff > 0.0) || !std::isfinite(mu_cutoff)) {
    throw InvalidInputError("reconstruct_density: mu_cutoff must be positive");
  }
  if (mu_points < 16) {
    throw InvalidInputError("reconstruct_density: mu_points must be >= 16");
  }
  const int m = grid.size();
  const double dx = grid.spacing();
  const double dmu = 2.0 * mu_cutoff / (mu_points - 1);

  // chi(mu_k, delta_d) for the 2m-1 node differences delta = (d - (m-1)) dx.
  Eigen::MatrixXcd chi(mu_points, 2 * m - 1);
  for (int k = 0; k < mu_points; ++k) {
    const double mu = -mu_cutoff + k * dmu;
    for (int d = 0; d < 2 * m - 1; ++d) {
      chi(k, d) = source.characteristic(mu, (d - (m - 1)) * dx);
    }
  }

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(m, m);
  Eigen::VectorXcd sum_phase(2 * m - 1);
  for (int k = 0; k < mu_points; ++k) {
    const double mu = -mu_cutoff + k * dmu;
    const double weight = (k == 0 || k == mu_points - 1) ? 0.5 * dmu : dmu;
    // e^{-i mu (x_i + x_j)/2} indexed by i + j.
    const std::complex<double> step =
        std::exp(std::complex<double>(0.0, -mu * dx / 2.0));
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, -mu * grid.x_min()));
    for (int t = 0; t < 2 * m - 1; ++t) {
      sum_phase[t] = phase;
      phase *= step;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        rho(i, j) += weight * chi(k, i - j + m - 1) * sum_phase[i + j];
      }
    }
  }
  rho /= kTwoPi;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double trace = rho.diagonal().real().sum() * dx;
  if (!(trace > 0.0) || !std::isfinite(trace)) {
    throw QuadratureError(
        "reconstruct_density: non-positive trace; truncation parameters "
        "are inadequate for this source");
  }
  rho /= trace;
  return DensityMatrix(grid, std::move(rho));
}

double fidelity(const GridWavefunction& psi, const DensityMatrix& rho) {
  if (!(psi.grid() == rho.grid())) {
    throw InvalidInputError("fidelity: wavefunction and matrix grids differ");
  }
  const Eigen::ArrayXd tw = psi.grid().trapezoid_weights();
  const Eigen::VectorXcd weighted =
      (psi.samples().array() * tw.cast<std::complex<double>>()).matrix();
  const std::complex<double> overlap =
      weighted.adjoint() * rho.elements() * weighted;
  return overlap.real();
}

}  // namespace tomolab
