#include "tomolab/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace tomolab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ProjectedGaussian::ProjectedGaussian(Eigen::VectorXd mean_,
                                     Eigen::MatrixXd covariance_)
    : mean(std::move(mean_)), covariance(std::move(covariance_)) {
  if (covariance.rows() != mean.size() || covariance.cols() != mean.size()) {
    throw InvalidInputError("ProjectedGaussian: covariance shape mismatch");
  }
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidInputError("ProjectedGaussian: covariance not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance,
                                                        Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() <= 1e-12) {
    throw DegenerateFrameError(
        "ProjectedGaussian: projected covariance is singular");
  }
}

ProjectedGaussian projected_covariance(const GaussianStateSpec& state,
                                       std::span<const SymplecticFrame> frames) {
  const int n = state.n_modes();
  if (static_cast<int>(frames.size()) != n) {
    throw WrongArityError("projected_covariance: one frame per mode required");
  }
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, 2 * n);
  Eigen::VectorXd mean(n);
  for (int k = 0; k < n; ++k) {
    t(k, 2 * k) = frames[k].mu;
    t(k, 2 * k + 1) = frames[k].nu;
    mean[k] = frames[k].mu * state.mean()[2 * k] +
              frames[k].nu * state.mean()[2 * k + 1];
  }
  Eigen::MatrixXd sigma = t * state.covariance() * t.transpose();
  return ProjectedGaussian(std::move(mean), std::move(sigma));
}

ProjectedGaussian projected_covariance(const GaussianStateSpec& state,
                                       const SymplecticFrame& frame) {
  return projected_covariance(state, std::span<const SymplecticFrame>(&frame, 1));
}

EntropyValue gaussian_shannon_entropy(const ProjectedGaussian& g) {
  const int n = g.dimension();
  const double det = g.covariance.determinant();
  return EntropyValue(
      0.5 * std::log(std::pow(kTwoPi * std::numbers::e, n) * det));
}

double gaussian_renyi_integral(const ProjectedGaussian& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameterError(
        "gaussian_renyi_integral: alpha must be positive");
  }
  const int n = g.dimension();
  const double det2pi = std::pow(kTwoPi, n) * g.covariance.determinant();
  return std::pow(det2pi, 0.5 * (1.0 - alpha)) * std::pow(alpha, -0.5 * n);
}

Eigen::ArrayXd gaussian_density_on(const ProjectedGaussian& g,
                                   const std::vector<ModeGrid>& axes) {
  const int n = g.dimension();
  if (static_cast<int>(axes.size()) != n) {
    throw WrongArityError("gaussian_density_on: one axis per dimension");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g.covariance);
  if (llt.info() != Eigen::Success) {
    throw DegenerateFrameError("gaussian_density_on: covariance not PD");
  }
  const double det = g.covariance.determinant();
  const double norm = std::pow(kTwoPi, -0.5 * n) / std::sqrt(det);

  Eigen::Index total = 1;
  for (const auto& a : axes) total *= a.size();
  Eigen::ArrayXd out(total);
  Eigen::VectorXd x(n);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index rem = flat;
    for (int k = n - 1; k >= 0; --k) {
      const Eigen::Index nk = axes[k].size();
      x[k] = axes[k].point(static_cast<int>(rem % nk));
      rem /= nk;
    }
    const Eigen::VectorXd d = x - g.mean;
    const double quad = d.dot(llt.solve(d));
    out[flat] = norm * std::exp(-0.5 * quad);
  }
  return out;
}

}  // namespace tomolab
