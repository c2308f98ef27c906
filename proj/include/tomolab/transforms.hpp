#pragma once

#include <Eigen/Core>

#include "tomolab/errors.hpp"
#include "tomolab/states.hpp"

namespace tomolab {

/// Phase-space rotation angle, reduced modulo 2*pi into [0, 2*pi).
class RotationAngle {
 public:
  explicit RotationAngle(double radians);

  double radians() const { return theta_; }
  RotationAngle plus_quarter_turn() const;

 private:
  double theta_;
};

/// L2-normalized Hermite function phi_n(x), evaluated by the stable
/// two-term recurrence
///   phi_{n+1}(x) = x*sqrt(2/(n+1))*phi_n(x) - sqrt(n/(n+1))*phi_{n-1}(x)
/// with phi_0(x) = pi^{-1/4} exp(-x^2/2). Underflow to 0 at large |x| is
/// acceptable. Requires 0 <= n <= 200.
double hermite_function(int n, double x);

/// Vectorized phi_n over an array of points.
Eigen::ArrayXd hermite_function(int n, const Eigen::ArrayXd& x);

/// Matrix of Hermite functions, row n holding phi_n over the points
/// (rows 0..n_max).
Eigen::MatrixXd hermite_basis(int n_max, const Eigen::ArrayXd& x);

/// Phase rule for rotating a Fock superposition: c_n -> c_n e^{-i n theta}.
/// The squared modulus of the resulting position wavefunction is the
/// distribution of the rotated quadrature q*cos(theta) + p*sin(theta).
FockSuperposition rotated_superposition(const FockSuperposition& state,
                                        RotationAngle theta);

/// Quadrature rotation (fractional Fourier transform) of a grid
/// wavefunction. Near-multiples of pi (|sin theta| < 1e-6) route to the
/// identity / parity shortcut; otherwise the kernel
///   K_theta(X, y) = (2*pi*i*sin theta)^{-1/2}
///                   * exp(i[(X^2+y^2)cos theta - 2 X y] / (2 sin theta))
/// is applied by trapezoid quadrature and the result renormalized. The
/// pre-renormalization norm must sit within 1e-8 of 1, else QuadratureError.
GridWavefunction quadrature_rotate(const GridWavefunction& psi,
                                   RotationAngle theta);

/// Momentum-representation wavefunction on the conjugate grid (the same
/// node set is reused; valid for the symmetric default grids):
///   psi~(p_i) = (2 pi)^{-1/2} sum_j psi(x_j) e^{-i p_i x_j} dx
GridWavefunction momentum_representation(const GridWavefunction& psi);

}  // namespace tomolab
