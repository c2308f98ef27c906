#include "tomolab/grid.hpp"

#include <cmath>

namespace tomolab {

ModeGrid::ModeGrid(double x_min, double x_max, int n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw InvalidInputError("ModeGrid: endpoints must be finite");
  }
  if (!(x_min < x_max)) {
    throw InvalidInputError("ModeGrid: requires x_min < x_max");
  }
  if (n_points < 16) {
    throw InvalidInputError("ModeGrid: requires at least 16 points");
  }
  spacing_ = (x_max_ - x_min_) / (n_points_ - 1);
}

Eigen::ArrayXd ModeGrid::points() const {
  Eigen::ArrayXd x(n_points_);
  for (int i = 0; i < n_points_; ++i) x[i] = point(i);
  return x;
}

Eigen::ArrayXd ModeGrid::trapezoid_weights() const {
  Eigen::ArrayXd w = Eigen::ArrayXd::Constant(n_points_, spacing_);
  w[0] *= 0.5;
  w[n_points_ - 1] *= 0.5;
  return w;
}

bool ModeGrid::is_symmetric() const {
  return std::abs(x_min_ + x_max_) < spacing_;
}

ModeGrid ModeGrid::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidInputError("ModeGrid::scaled: factor must be positive");
  }
  return ModeGrid(x_min_ * factor, x_max_ * factor, n_points_);
}

ModeGrid ModeGrid::standard() { return ModeGrid(-8.0, 8.0, 1024); }

ModeGrid ModeGrid::standard_multimode_axis() { return ModeGrid(-8.0, 8.0, 128); }

}  // namespace tomolab
