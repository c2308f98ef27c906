#pragma once

#include <utility>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/errors.hpp"
#include "tomolab/states.hpp"
#include "tomolab/transforms.hpp"

namespace tomolab {

/// Entropy in nats. NaN is forbidden by construction.
struct EntropyValue {
  double nats;

  explicit EntropyValue(double value) : nats(value) {
    if (!std::isfinite(nats)) {
      throw InvalidInputError("EntropyValue: non-finite entropy");
    }
  }
};

/// Shannon differential entropy -integral w ln w of a sampled density
/// (1D or tensor N-D), trapezoid rule, with the 0*ln(0) = 0 convention
/// (weights below 1e-300 contribute nothing).
EntropyValue shannon_entropy(const SampledDensity& density);

/// Trapezoid integral of w^alpha (alpha > 0).
double renyi_integral(const SampledDensity& density, double alpha);

/// Renyi entropy (1/(1-alpha)) ln integral w^alpha; alpha = 1 is rejected
/// (use shannon_entropy).
EntropyValue renyi_entropy(const SampledDensity& density, double alpha);

struct MarginalEntropies {
  EntropyValue position;
  EntropyValue momentum;
};

/// Shannon entropies of the position and momentum marginals.
MarginalEntropies position_momentum_entropies(const GridWavefunction& psi);
MarginalEntropies position_momentum_entropies(const DensityMatrix& rho);
MarginalEntropies position_momentum_entropies(const GaussianStateSpec& state);
MarginalEntropies position_momentum_entropies(const FockSuperposition& state,
                                              const ModeGrid& grid);
MarginalEntropies position_momentum_entropies(const MultimodeProductState& state,
                                              const ModeGrid& axis_grid);
MarginalEntropies position_momentum_entropies(const State& state);

/// Von Neumann entropy -sum lambda ln lambda over the spectrum of
/// rho*dx. Eigenvalues in [-1e-6, 0] are clipped to zero; anything below
/// -1e-6 is a NonphysicalMatrixError. Eigenvalues are clipped to [0, 1].
EntropyValue von_neumann_entropy(const DensityMatrix& rho);

/// Tomographic-entropy scaling offset S(r cos theta, r sin theta) - ln r.
/// Independent of r: the homogeneity of the symplectic tomogram makes this
/// a function of the angle alone.
double entropy_scaling_offset(const OneModeState& state, RotationAngle theta,
                              double r, const ModeGrid& grid);
double entropy_scaling_offset(const OneModeState& state, RotationAngle theta,
                              double r);

}  // namespace tomolab
