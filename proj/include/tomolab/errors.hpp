#pragma once

#include <stdexcept>
#include <string>

namespace tomolab {

/// Base class for all tomolab errors.
struct TomolabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed argument: bad dimensions, non-finite values, unparsable input.
struct InvalidInputError : TomolabError {
  using TomolabError::TomolabError;
};

/// A state description that cannot represent a quantum state (e.g. all-zero
/// Fock coefficients, zero-norm wavefunction).
struct InvalidStateError : TomolabError {
  using TomolabError::TomolabError;
};

/// Gaussian covariance violating the uncertainty condition.
struct NonphysicalStateError : TomolabError {
  using TomolabError::TomolabError;
};

/// Density matrix with an eigenvalue below the physical tolerance.
struct NonphysicalMatrixError : TomolabError {
  using TomolabError::TomolabError;
};

/// Reference frame with radius zero (tomogram degenerates to a delta).
struct DegenerateFrameError : TomolabError {
  using TomolabError::TomolabError;
};

/// Mode count of a state does not match the frames/arguments supplied.
struct WrongArityError : TomolabError {
  using TomolabError::TomolabError;
};

/// Scalar parameter outside its admissible range (e.g. Renyi order <= 0).
struct InvalidParameterError : TomolabError {
  using TomolabError::TomolabError;
};

/// Tomogram source cannot supply the requested reference frame.
struct UnsupportedSourceError : TomolabError {
  using TomolabError::TomolabError;
};

/// Quadrature produced a result outside its accuracy contract.
struct QuadratureError : TomolabError {
  using TomolabError::TomolabError;
};

}  // namespace tomolab
