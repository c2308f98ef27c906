#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tomolab/density.hpp"
#include "tomolab/inequalities.hpp"

namespace tomolab::cli {

/// One measured optical tomogram: all records sharing an angle, validated
/// to sit on a uniform X grid and renormalized (the applied factor is
/// retained for reporting).
struct AngleBlock {
  double theta;
  SampledDensity density;
  double renorm_factor;
};

/// Homodyne-style dataset of (theta, X, w) records grouped by angle.
class MeasuredTomogramDataset {
 public:
  /// Parse a tomogram CSV (`theta,X,w` header, `#` comment lines allowed).
  /// Per-angle grids must be uniform within 1e-9 relative spacing; weights
  /// below -norm_tol and per-angle integrals off 1 by more than norm_tol
  /// are rejected. Small negatives are clamped to zero before
  /// renormalization.
  static MeasuredTomogramDataset load_csv(const std::string& path,
                                          double norm_tol = 1e-2);

  const std::vector<AngleBlock>& blocks() const { return blocks_; }

  /// Block at the requested angle within angle_tol; InvalidInputError when
  /// the dataset lacks it.
  const AngleBlock& at_angle(double theta, double angle_tol = 1e-6) const;

  /// All (theta, theta + pi/2) pairs present in the dataset, ordered by
  /// the first angle.
  std::vector<std::pair<double, double>> conjugate_pairs(
      double angle_tol = 1e-6) const;

 private:
  std::vector<AngleBlock> blocks_;
};

/// Run the Shannon and Renyi conjugate-pair checks over measured tomograms.
/// Each requested pair must differ by pi/2 (mod 2 pi, within 1e-6) and both
/// angles must exist in the dataset. Reports carry the renormalization
/// factors that were applied on ingestion.
std::vector<InequalityReport> validate_measured_tomogram(
    const MeasuredTomogramDataset& dataset,
    const std::vector<std::pair<double, double>>& pairs,
    const std::vector<double>& q_grid, double margin_tol = 1e-3);

}  // namespace tomolab::cli
