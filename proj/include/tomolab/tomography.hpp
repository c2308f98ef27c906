#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/states.hpp"
#include "tomolab/transforms.hpp"

namespace tomolab {

/// Optical tomogram w(X, theta): distribution of q cos(theta) + p sin(theta).
/// Fock states evaluate the phase rule sum c_n e^{-i n theta} phi_n directly
/// on the requested grid; Gaussian states use the closed form.
SampledDensity optical_tomogram(const FockSuperposition& state,
                                RotationAngle theta, const ModeGrid& grid);
/// Grid wavefunctions rotate by the fractional-Fourier kernel on their own
/// grid.
SampledDensity optical_tomogram(const GridWavefunction& psi,
                                RotationAngle theta);
SampledDensity optical_tomogram(const GaussianStateSpec& state,
                                RotationAngle theta, const ModeGrid& grid);
/// Dispatch over the one-mode state kinds. Grid wavefunctions ignore the
/// grid argument and use their own grid.
SampledDensity optical_tomogram(const OneModeState& state, RotationAngle theta,
                                const ModeGrid& grid);

/// Symplectic tomogram w(X, mu, nu) on the requested grid, via the
/// homogeneity reduction w(X, mu, nu) = (1/r) w_opt(X/r, theta).
/// Fock and Gaussian states evaluate w_opt analytically at X/r; grid
/// wavefunctions interpolate their rotated tomogram linearly.
SampledDensity symplectic_tomogram(const OneModeState& state,
                                   const SymplecticFrame& frame,
                                   const ModeGrid& grid);

struct MultimodeTomogram {
  std::vector<SymplecticFrame> frames;
  SampledDensity density;
};

/// Multimode tomogram over the tensor grid. Product states tensor their
/// per-mode symplectic tomograms; Gaussian states evaluate the projected
/// multivariate normal. When no axes are supplied, each mode gets the
/// standard 128-point axis scaled by its frame radius.
MultimodeTomogram multimode_tomogram(const MultimodeProductState& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes = {});
MultimodeTomogram multimode_tomogram(const GaussianStateSpec& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes = {});
MultimodeTomogram multimode_tomogram(const State& state,
                                     std::span<const SymplecticFrame> frames,
                                     const std::vector<ModeGrid>& axes = {});

/// Supplier of tomograms at arbitrary frames, the input contract of the
/// inverse map. `characteristic` is the tomogram's unit-frequency Fourier
/// transform integral w(X, mu, nu) e^{iX} dX; the default computes it by
/// trapezoid quadrature of `optical` using the homogeneity reduction.
class TomogramSource {
 public:
  virtual ~TomogramSource() = default;

  virtual SampledDensity optical(RotationAngle theta) const = 0;
  virtual std::complex<double> characteristic(double mu, double nu) const;
};

class FockTomogramSource final : public TomogramSource {
 public:
  FockTomogramSource(FockSuperposition state, ModeGrid grid);

  SampledDensity optical(RotationAngle theta) const override;
  std::complex<double> characteristic(double mu, double nu) const override;

 private:
  FockSuperposition state_;
  ModeGrid grid_;
  Eigen::MatrixXcd basis_;  // hermite basis as complex, rows n
  Eigen::ArrayXd quad_weights_;
};

class GaussianTomogramSource final : public TomogramSource {
 public:
  GaussianTomogramSource(GaussianStateSpec state, ModeGrid grid);

  SampledDensity optical(RotationAngle theta) const override;
  std::complex<double> characteristic(double mu, double nu) const override;

 private:
  GaussianStateSpec state_;
  ModeGrid grid_;
};

class WavefunctionTomogramSource final : public TomogramSource {
 public:
  explicit WavefunctionTomogramSource(GridWavefunction psi);

  SampledDensity optical(RotationAngle theta) const override;
  /// Weyl-shift form e^{i mu nu / 2} integral conj(psi)(x) e^{i mu x}
  /// psi(x + nu) dx with psi(x + nu) linearly interpolated; O(n) per frame
  /// instead of an O(n^2) kernel rotation.
  std::complex<double> characteristic(double mu, double nu) const override;

 private:
  GridWavefunction psi_;
  Eigen::ArrayXd quad_weights_;
};

std::unique_ptr<TomogramSource> make_tomogram_source(const OneModeState& state,
                                                     const ModeGrid& grid);

/// Inverse map: assemble rho(x, x') = (1/2pi) integral dmu
/// chi(mu, x - x') exp(-i mu (x + x')/2) with chi the tomogram
/// characteristic function, truncating mu to [-mu_cutoff, mu_cutoff] with
/// mu_points trapezoid nodes. The result is Hermitized and trace-normalized.
DensityMatrix reconstruct_density(const TomogramSource& source,
                                  const ModeGrid& grid, double mu_cutoff = 10.0,
                                  int mu_points = 512);

/// Overlap <psi| rho |psi> of a pure reference with a density matrix on the
/// same grid.
double fidelity(const GridWavefunction& psi, const DensityMatrix& rho);

}  // namespace tomolab
