#include "tomolab/density.hpp"

#include <cmath>

namespace tomolab {

SymplecticFrame::SymplecticFrame(double mu_, double nu_) : mu(mu_), nu(nu_) {
  if (!std::isfinite(mu) || !std::isfinite(nu)) {
    throw InvalidInputError("SymplecticFrame: parameters must be finite");
  }
  if (radius() <= 0.0) {
    throw DegenerateFrameError(
        "SymplecticFrame: mu = nu = 0 degenerates the tomogram to delta(X)");
  }
}

double SymplecticFrame::radius() const { return std::hypot(mu, nu); }

double SymplecticFrame::angle() const { return std::atan2(nu, mu); }

SymplecticFrame SymplecticFrame::optical(RotationAngle theta) {
  return SymplecticFrame(std::cos(theta.radians()), std::sin(theta.radians()));
}

SymplecticFrame SymplecticFrame::conjugate() const {
  const double r2 = mu * mu + nu * nu;
  return SymplecticFrame(-nu / r2, mu / r2);
}

SymplecticFrame SymplecticFrame::scaled(double lambda) const {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw InvalidInputError("SymplecticFrame::scaled: lambda must be nonzero");
  }
  return SymplecticFrame(lambda * mu, lambda * nu);
}

SampledDensity::SampledDensity(ModeGrid axis, Eigen::ArrayXd weights,
                               double norm_tol)
    : axes_{axis}, weights_(std::move(weights)) {
  validate(norm_tol);
}

SampledDensity::SampledDensity(std::vector<ModeGrid> axes,
                               Eigen::ArrayXd weights, double norm_tol)
    : axes_(std::move(axes)), weights_(std::move(weights)) {
  validate(norm_tol);
}

void SampledDensity::validate(double norm_tol) {
  if (axes_.empty() || axes_.size() > 3) {
    throw InvalidInputError("SampledDensity: needs 1 to 3 axes");
  }
  Eigen::Index expected = 1;
  for (const auto& a : axes_) expected *= a.size();
  if (weights_.size() != expected) {
    throw InvalidInputError("SampledDensity: weight count != grid size");
  }
  if (!weights_.allFinite()) {
    throw InvalidInputError("SampledDensity: non-finite weight");
  }
  if (weights_.minCoeff() < 0.0) {
    throw InvalidInputError("SampledDensity: negative weight");
  }
  if (std::abs(integral() - 1.0) > norm_tol) {
    throw InvalidInputError("SampledDensity: not normalized within tolerance");
  }
}

SampledDensity SampledDensity::from_unnormalized(std::vector<ModeGrid> axes,
                                                 Eigen::ArrayXd weights,
                                                 double max_defect) {
  std::vector<Eigen::ArrayXd> tws;
  tws.reserve(axes.size());
  for (const auto& a : axes) tws.push_back(a.trapezoid_weights());
  const double total = (weights * tensor_product(tws)).sum();
  if (!std::isfinite(total) || std::abs(total - 1.0) > max_defect) {
    throw InvalidInputError(
        "SampledDensity: integral too far from 1 to renormalize silently; "
        "the grid likely fails to cover the support");
  }
  weights /= total;
  return SampledDensity(std::move(axes), std::move(weights));
}

Eigen::ArrayXd SampledDensity::quadrature_weights() const {
  std::vector<Eigen::ArrayXd> tws;
  tws.reserve(axes_.size());
  for (const auto& a : axes_) tws.push_back(a.trapezoid_weights());
  return tensor_product(tws);
}

double SampledDensity::integral() const {
  return (weights_ * quadrature_weights()).sum();
}

Eigen::ArrayXd tensor_product(const std::vector<Eigen::ArrayXd>& factors) {
  if (factors.empty()) {
    throw InvalidInputError("tensor_product: no factors");
  }
  Eigen::ArrayXd out = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) {
    Eigen::ArrayXd next(out.size() * factors[k].size());
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      for (Eigen::Index j = 0; j < factors[k].size(); ++j) {
        next[idx++] = out[i] * factors[k][j];
      }
    }
    out.swap(next);
  }
  return out;
}

}  // namespace tomolab
