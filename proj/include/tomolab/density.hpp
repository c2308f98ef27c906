#pragma once

#include <Eigen/Core>
#include <vector>

#include "tomolab/errors.hpp"
#include "tomolab/grid.hpp"
#include "tomolab/transforms.hpp"

namespace tomolab {

/// Phase-space reference frame (mu, nu) labelling the observable
/// mu*q + nu*p, with radius r = sqrt(mu^2 + nu^2) > 0 and angle
/// theta = atan2(nu, mu).
struct SymplecticFrame {
  double mu;
  double nu;

  SymplecticFrame(double mu_, double nu_);

  double radius() const;
  double angle() const;

  /// Unit-circle frame (cos theta, sin theta) of the optical tomogram.
  static SymplecticFrame optical(RotationAngle theta);
  /// Frame of the observable canonically conjugate to this one:
  /// (-nu, mu) / r^2, which has radius 1/r.
  SymplecticFrame conjugate() const;
  /// Frame scaled by lambda (lambda != 0).
  SymplecticFrame scaled(double lambda) const;
};

/// Nonnegative, trapezoid-normalized probability density sampled on a
/// uniform grid (1D) or on a tensor product of uniform grids (N-D, N <= 3).
/// Weights are stored flattened in row-major order (axis 0 slowest).
class SampledDensity {
 public:
  SampledDensity(ModeGrid axis, Eigen::ArrayXd weights, double norm_tol = 1e-6);
  SampledDensity(std::vector<ModeGrid> axes, Eigen::ArrayXd weights,
                 double norm_tol = 1e-6);

  /// Rescale weights to unit integral first (loud failure when the defect
  /// exceeds max_defect), then construct.
  static SampledDensity from_unnormalized(std::vector<ModeGrid> axes,
                                          Eigen::ArrayXd weights,
                                          double max_defect = 1e-3);

  int n_axes() const { return static_cast<int>(axes_.size()); }
  const ModeGrid& axis(int k = 0) const { return axes_.at(k); }
  const std::vector<ModeGrid>& axes() const { return axes_; }
  const Eigen::ArrayXd& weights() const { return weights_; }
  Eigen::Index size() const { return weights_.size(); }

  /// Flattened tensor-product trapezoid weights matching weights().
  Eigen::ArrayXd quadrature_weights() const;
  double integral() const;

 private:
  void validate(double norm_tol);

  std::vector<ModeGrid> axes_;
  Eigen::ArrayXd weights_;
};

/// Flattened outer product of per-axis arrays (row-major, axis 0 slowest).
Eigen::ArrayXd tensor_product(const std::vector<Eigen::ArrayXd>& factors);

}  // namespace tomolab
