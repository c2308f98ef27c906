#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/entropy.hpp"
#include "tomolab/states.hpp"

namespace tomolab {

/// Distribution of the projected quadrature vector (X_1, ..., X_N) of a
/// Gaussian state measured in N symplectic frames: a multivariate normal
/// with positive-definite covariance.
struct ProjectedGaussian {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  ProjectedGaussian(Eigen::VectorXd mean_, Eigen::MatrixXd covariance_);

  int dimension() const { return static_cast<int>(mean.size()); }
};

/// Statistics of X_k = mu_k q_k + nu_k p_k for a Gaussian state:
/// mean_k = mu_k <q_k> + nu_k <p_k> and Sigma = T V T^T with T the
/// frame-projection matrix.
ProjectedGaussian projected_covariance(const GaussianStateSpec& state,
                                       std::span<const SymplecticFrame> frames);

ProjectedGaussian projected_covariance(const GaussianStateSpec& state,
                                       const SymplecticFrame& frame);

/// Closed-form Shannon entropy (1/2) ln((2 pi e)^N det Sigma).
EntropyValue gaussian_shannon_entropy(const ProjectedGaussian& g);

/// Closed-form integral of w^alpha: det(2 pi Sigma)^{(1-alpha)/2} alpha^{-N/2}.
double gaussian_renyi_integral(const ProjectedGaussian& g, double alpha);

/// Normal density evaluated over a tensor grid, flattened row-major.
Eigen::ArrayXd gaussian_density_on(const ProjectedGaussian& g,
                                   const std::vector<ModeGrid>& axes);

}  // namespace tomolab
