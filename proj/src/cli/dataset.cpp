#include "tomolab/cli/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace tomolab::cli {

namespace {

struct Record {
  double theta;
  double x;
  double w;
};

AngleBlock build_block(double theta, std::vector<Record> rows, double norm_tol) {
  std::sort(rows.begin(), rows.end(),
            [](const Record& a, const Record& b) { return a.x < b.x; });
  const int n = static_cast<int>(rows.size());
  if (n < 16) {
    throw InvalidInputError("dataset: angle block has fewer than 16 records");
  }
  const double dx = (rows.back().x - rows.front().x) / (n - 1);
  if (!(dx > 0.0)) {
    throw InvalidInputError("dataset: duplicate X values in an angle block");
  }
  Eigen::ArrayXd w(n);
  for (int i = 0; i < n; ++i) {
    const double expected = rows.front().x + i * dx;
    if (std::abs(rows[i].x - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw InvalidInputError(
          "dataset: X grid not uniform within 1e-9 relative spacing");
    }
    if (rows[i].w < -norm_tol) {
      throw InvalidInputError(
          "dataset: negative tomogram weight beyond tolerance (w >= 0 required)");
    }
    w[i] = std::max(rows[i].w, 0.0);
  }
  ModeGrid grid(rows.front().x, rows.back().x, n);
  const double integral = (w * grid.trapezoid_weights()).sum();
  if (!(integral > 0.0) || std::abs(integral - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "dataset: tomogram at theta=" << theta
        << " integrates to " << integral << ", outside the normalization "
        << "tolerance " << norm_tol;
    throw InvalidInputError(msg.str());
  }
  const double factor = 1.0 / integral;
  return AngleBlock{theta, SampledDensity(grid, w * factor), factor};
}

}  // namespace

MeasuredTomogramDataset MeasuredTomogramDataset::load_csv(
    const std::string& path, double norm_tol) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("dataset: cannot open " + path);
  }
  std::vector<Record> records;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "theta,X,w") {
        throw InvalidInputError("dataset: expected header theta,X,w");
      }
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    Record rec{};
    char c1, c2;
    if (!(row >> rec.theta >> c1 >> rec.x >> c2 >> rec.w) || c1 != ',' ||
        c2 != ',') {
      throw InvalidInputError("dataset: malformed row: " + line);
    }
    records.push_back(rec);
  }
  if (records.empty()) {
    throw InvalidInputError("dataset: no records in " + path);
  }

  // Cluster by angle (exact values from the generator; 1e-9 absorbs
  // round-trip noise).
  std::map<double, std::vector<Record>> groups;
  for (const Record& rec : records) {
    auto it = groups.lower_bound(rec.theta - 1e-9);
    if (it != groups.end() && std::abs(it->first - rec.theta) <= 1e-9) {
      it->second.push_back(rec);
    } else {
      groups[rec.theta].push_back(rec);
    }
  }

  MeasuredTomogramDataset ds;
  for (auto& [theta, rows] : groups) {
    ds.blocks_.push_back(build_block(theta, std::move(rows), norm_tol));
  }
  return ds;
}

const AngleBlock& MeasuredTomogramDataset::at_angle(double theta,
                                                    double angle_tol) const {
  for (const AngleBlock& block : blocks_) {
    if (std::abs(block.theta - theta) <= angle_tol) return block;
  }
  std::ostringstream msg;
  msg << "dataset: no tomogram at theta=" << theta
      << " (missing partner angle?)";
  throw InvalidInputError(msg.str());
}

std::vector<std::pair<double, double>> MeasuredTomogramDataset::conjugate_pairs(
    double angle_tol) const {
  std::vector<std::pair<double, double>> pairs;
  for (const AngleBlock& block : blocks_) {
    const double partner = block.theta + std::numbers::pi / 2.0;
    for (const AngleBlock& other : blocks_) {
      if (std::abs(other.theta - partner) <= angle_tol) {
        pairs.emplace_back(block.theta, other.theta);
        break;
      }
    }
  }
  return pairs;
}

std::vector<InequalityReport> validate_measured_tomogram(
    const MeasuredTomogramDataset& dataset,
    const std::vector<std::pair<double, double>>& pairs,
    const std::vector<double>& q_grid, double margin_tol) {
  if (pairs.empty()) {
    throw InvalidInputError(
        "validate: no conjugate (theta, theta + pi/2) pairs to check");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<InequalityReport> reports;
  for (const auto& [theta, partner] : pairs) {
    double gap = std::fmod(partner - theta, kTwoPi);
    if (gap < 0.0) gap += kTwoPi;
    if (std::abs(gap - std::numbers::pi / 2.0) > 1e-6) {
      throw InvalidInputError(
          "validate: pair angles must differ by pi/2 (mod 2 pi)");
    }
    const AngleBlock& b1 = dataset.at_angle(theta);
    const AngleBlock& b2 = dataset.at_angle(partner);

    InequalityReport shannon =
        check_optical_shannon(b1.density, b2.density, b1.theta, margin_tol);
    shannon.params.emplace_back("renorm_factor_theta", b1.renorm_factor);
    shannon.params.emplace_back("renorm_factor_conjugate", b2.renorm_factor);
    reports.push_back(std::move(shannon));

    for (double q : q_grid) {
      InequalityReport renyi = check_optical_renyi(
          b1.density, b2.density, b1.theta, QParameter(q), margin_tol);
      renyi.params.emplace_back("renorm_factor_theta", b1.renorm_factor);
      renyi.params.emplace_back("renorm_factor_conjugate", b2.renorm_factor);
      reports.push_back(std::move(renyi));
    }
  }
  return reports;
}

}  // namespace tomolab::cli
