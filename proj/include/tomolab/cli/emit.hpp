#pragma once

#include <span>
#include <string>
#include <vector>

#include "tomolab/cli/config.hpp"
#include "tomolab/density.hpp"
#include "tomolab/inequalities.hpp"
#include "tomolab/states.hpp"

namespace tomolab::cli {

/// Shortest fixed-width float rendering used by every writer: printf %.17g.
std::string format_g17(double value);

/// {"schema_version": 1, "reports": [...]} with fixed key order and 17
/// significant digits; byte-identical for identical report vectors.
void write_report_json(const std::string& path,
                       std::span<const InequalityReport> reports);

/// Flat CSV with the union of parameter columns (first-seen order).
void write_report_csv(const std::string& path,
                      std::span<const InequalityReport> reports);

void write_reports(const std::string& path, OutputFormat format,
                   std::span<const InequalityReport> reports);

struct TomogramRow {
  std::vector<double> frame;  // {theta} or {mu, nu}
  double x;
  double w;
};

/// Tomogram CSV: "# schema_version=1" comment, then `theta,X,w` (or
/// `mu,nu,X,w`) rows.
void write_tomogram_csv(const std::string& path, bool symplectic,
                        std::span<const TomogramRow> rows);

/// Density-matrix CSV: `x,xp,re,im` rows.
void write_density_matrix_csv(const std::string& path, const DensityMatrix& rho);

}  // namespace tomolab::cli
