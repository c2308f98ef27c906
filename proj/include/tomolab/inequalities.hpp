#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/entropy.hpp"
#include "tomolab/states.hpp"
#include "tomolab/transforms.hpp"

namespace tomolab {

/// Parameter of the q-family of Renyi inequalities, restricted to the open
/// interval (0, 1). The conjugate exponent pair alpha = 1/(1-q),
/// beta = 1/(1+q) satisfies 1/alpha + 1/beta = 2 by construction.
class QParameter {
 public:
  explicit QParameter(double q);

  double q() const { return q_; }
  double alpha() const { return 1.0 / (1.0 - q_); }
  double beta() const { return 1.0 / (1.0 + q_); }

 private:
  double q_;
};

/// One evaluated inequality: named, parameterized, with margin = lhs - rhs
/// and satisfied <=> margin >= -tolerance. All fields finite.
struct InequalityReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool satisfied = false;
};

InequalityReport make_report(std::string name,
                             std::vector<std::pair<std::string, double>> params,
                             double lhs, double rhs, double tolerance);

/// Grid and tolerance knobs shared by the checkers. The default tolerances
/// follow the observed trapezoid error of each evaluation path; an explicit
/// override wins everywhere.
struct CheckOptions {
  ModeGrid grid = ModeGrid::standard();
  ModeGrid multimode_axis = ModeGrid::standard_multimode_axis();
  double tolerance_analytic = 1e-6;
  double tolerance_grid = 1e-4;
  double tolerance_multimode = 1e-3;
  std::optional<double> tolerance_override;
  double frame_radius = 1.0;  // r used by sweeps of the symplectic variant

  double pick(double path_default) const {
    return tolerance_override ? *tolerance_override : path_default;
  }
};

/// Right-hand side of the q-parameterized inequalities for N modes:
/// (N/2) [ ((q-1)/q) ln(pi(1-q)) + ((q+1)/q) ln(pi(1+q)) ].
double renyi_rhs(const QParameter& q, int n_modes);

/// S_x + S_p >= N ln(pi e).
InequalityReport check_shannon_position_momentum(const State& state,
                                                 int n_modes,
                                                 const CheckOptions& opts = {});

/// S(theta) + S(theta + pi/2) >= ln(pi e), from a state or directly from a
/// pair of measured densities at conjugate angles.
InequalityReport check_optical_shannon(const OneModeState& state,
                                       RotationAngle theta,
                                       const CheckOptions& opts = {});
InequalityReport check_optical_shannon(const SampledDensity& w_theta,
                                       const SampledDensity& w_conjugate,
                                       double theta, double tolerance);

/// Renyi position/momentum relation with the alpha exponent on the momentum
/// marginal.
InequalityReport check_renyi_position_momentum(const OneModeState& state,
                                               const QParameter& q,
                                               const CheckOptions& opts = {});

/// q-parameterized optical-tomogram inequality: exponent 1/(1-q) on
/// w(X, theta + pi/2), exponent 1/(1+q) on w(X, theta).
InequalityReport check_optical_renyi(const OneModeState& state,
                                     RotationAngle theta, const QParameter& q,
                                     const CheckOptions& opts = {});
InequalityReport check_optical_renyi(const SampledDensity& w_theta,
                                     const SampledDensity& w_conjugate,
                                     double theta, const QParameter& q,
                                     double tolerance);

/// Symplectic-tomogram generalization at frame radius r. The alpha-exponent
/// tomogram is taken at the frame canonically conjugate to
/// (r cos theta, r sin theta), i.e. (-sin theta, cos theta)/r; the
/// homogeneity ln(r) contributions then cancel between the two summands and
/// the margin is r-independent.
InequalityReport check_symplectic_renyi(const OneModeState& state, double r,
                                        RotationAngle theta,
                                        const QParameter& q,
                                        const CheckOptions& opts = {});

enum class TomogramVariant { optical, symplectic };

/// Multimode inequality over N-dimensional tomograms. The optical variant
/// forces unit frame radii (keeping the frame angles).
InequalityReport check_multimode_renyi(const State& state,
                                       std::span<const SymplecticFrame> frames,
                                       const QParameter& q,
                                       TomogramVariant variant,
                                       const CheckOptions& opts = {});

enum class CheckKind {
  shannon_position_momentum,
  optical_shannon,
  optical_renyi,
  symplectic_renyi,
};

/// Deterministic sweep: variant-major, then theta, then q. Grids must be
/// non-empty; per-check failures are rethrown with the offending parameters
/// attached.
std::vector<InequalityReport> sweep_reports(const OneModeState& state,
                                            const std::vector<double>& thetas,
                                            const std::vector<double>& qs,
                                            const std::vector<CheckKind>& kinds,
                                            const CheckOptions& opts = {});

}  // namespace tomolab
