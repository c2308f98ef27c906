#pragma once

#include <Eigen/Core>

#include "tomolab/errors.hpp"

namespace tomolab {

/// Uniform 1D quadrature grid for a dimensionless quadrature variable
/// (hbar = 1). All integrals in the library use the trapezoid rule on
/// these grids.
class ModeGrid {
 public:
  ModeGrid(double x_min, double x_max, int n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int size() const { return n_points_; }
  double spacing() const { return spacing_; }

  double point(int i) const { return x_min_ + spacing_ * i; }
  Eigen::ArrayXd points() const;

  /// Trapezoid quadrature weights (spacing everywhere, half at endpoints).
  Eigen::ArrayXd trapezoid_weights() const;

  /// Grid symmetric about 0 within one spacing, the recommended layout.
  bool is_symmetric() const;

  /// Grid with both endpoints multiplied by `factor` (> 0), same node count.
  ModeGrid scaled(double factor) const;

  /// Default working grid: [-8, 8] with 1024 points. Covers Fock states up
  /// to n ~ 20 with truncation mass below 1e-10.
  static ModeGrid standard();

  /// Default per-axis grid for multimode tensor products: [-8, 8], 128 points.
  static ModeGrid standard_multimode_axis();

  friend bool operator==(const ModeGrid&, const ModeGrid&) = default;

 private:
  double x_min_;
  double x_max_;
  int n_points_;
  double spacing_;
};

}  // namespace tomolab
