#include "tomolab/transforms.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace tomolab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this |sin theta| the fractional-Fourier kernel is replaced by the
// identity/parity shortcut to avoid the 1/sin(theta) blow-up.
constexpr double kSingularSin = 1e-6;
constexpr double kNormTolerance = 1e-8;
}  // namespace

RotationAngle::RotationAngle(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidInputError("RotationAngle: angle must be finite");
  }
  theta_ = std::fmod(radians, kTwoPi);
  if (theta_ < 0.0) theta_ += kTwoPi;
  if (theta_ >= kTwoPi) theta_ = 0.0;
}

RotationAngle RotationAngle::plus_quarter_turn() const {
  return RotationAngle(theta_ + kPi / 2.0);
}

double hermite_function(int n, double x) {
  if (n < 0 || n > 200) {
    throw InvalidInputError("hermite_function: order must be in [0, 200]");
  }
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::ArrayXd hermite_function(int n, const Eigen::ArrayXd& x) {
  if (n < 0 || n > 200) {
    throw InvalidInputError("hermite_function: order must be in [0, 200]");
  }
  Eigen::ArrayXd prev = Eigen::ArrayXd::Zero(x.size());
  Eigen::ArrayXd cur = std::pow(kPi, -0.25) * (-0.5 * x.square()).exp();
  for (int k = 0; k < n; ++k) {
    Eigen::ArrayXd next =
        x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

Eigen::MatrixXd hermite_basis(int n_max, const Eigen::ArrayXd& x) {
  if (n_max < 0 || n_max > 200) {
    throw InvalidInputError("hermite_basis: order must be in [0, 200]");
  }
  Eigen::MatrixXd basis(n_max + 1, x.size());
  basis.row(0) = (std::pow(kPi, -0.25) * (-0.5 * x.square()).exp()).matrix();
  if (n_max >= 1) {
    basis.row(1) = (std::sqrt(2.0) * x * basis.row(0).transpose().array()).matrix();
  }
  for (int k = 1; k < n_max; ++k) {
    basis.row(k + 1) =
        (x * std::sqrt(2.0 / (k + 1)) * basis.row(k).transpose().array() -
         std::sqrt(double(k) / (k + 1)) * basis.row(k - 1).transpose().array())
            .matrix();
  }
  return basis;
}

FockSuperposition rotated_superposition(const FockSuperposition& state,
                                        RotationAngle theta) {
  Eigen::VectorXcd coeffs = state.coefficients();
  const std::complex<double> minus_i(0.0, -1.0);
  for (int n = 0; n < coeffs.size(); ++n) {
    coeffs[n] *= std::exp(minus_i * (theta.radians() * n));
  }
  return FockSuperposition(std::move(coeffs));
}

GridWavefunction quadrature_rotate(const GridWavefunction& psi,
                                   RotationAngle theta) {
  const double th = theta.radians();
  const double sin_th = std::sin(th);
  if (std::abs(sin_th) < kSingularSin) {
    const long k = std::lround(th / kPi);
    if (k % 2 == 0) return psi;
    // Parity reflection; exact for symmetric grids.
    return GridWavefunction(psi.grid(), psi.samples().reverse());
  }
  const double cos_th = std::cos(th);
  const int n = psi.grid().size();
  const Eigen::ArrayXd x = psi.grid().points();
  const Eigen::ArrayXd tw = psi.grid().trapezoid_weights();
  const std::complex<double> prefactor =
      1.0 / std::sqrt(std::complex<double>(0.0, kTwoPi * sin_th));

  Eigen::ArrayXcd weighted =
      psi.samples().array() * tw.cast<std::complex<double>>();
  const double alpha = cos_th / (2.0 * sin_th);
  const double beta = 1.0 / sin_th;
  const std::complex<double> imag_unit(0.0, 1.0);

  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    const double xi = x[i];
    Eigen::ArrayXd phase = alpha * (xi * xi + x.square()) - (beta * xi) * x;
    out[i] = prefactor * ((imag_unit * phase).exp() * weighted).sum();
  }

  const double norm =
      std::sqrt((out.array().abs2() * tw).sum());
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw QuadratureError(
        "quadrature_rotate: kernel quadrature norm defect exceeds 1e-8; "
        "grid too coarse or angle too close to a singular multiple of pi");
  }
  return GridWavefunction(psi.grid(), std::move(out));
}

GridWavefunction momentum_representation(const GridWavefunction& psi) {
  const int n = psi.grid().size();
  const Eigen::ArrayXd x = psi.grid().points();
  const Eigen::ArrayXd tw = psi.grid().trapezoid_weights();
  Eigen::ArrayXcd weighted =
      psi.samples().array() * tw.cast<std::complex<double>>();
  const std::complex<double> minus_i(0.0, -1.0);
  const double scale = 1.0 / std::sqrt(kTwoPi);

  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    Eigen::ArrayXcd phase = (minus_i * x[i] * x).exp();
    out[i] = scale * (phase * weighted).sum();
  }

  const double norm = std::sqrt((out.array().abs2() * tw).sum());
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw QuadratureError(
        "momentum_representation: Parseval norm defect exceeds 1e-8");
  }
  return GridWavefunction(psi.grid(), std::move(out));
}

}  // namespace tomolab
