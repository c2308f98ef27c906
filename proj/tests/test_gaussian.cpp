#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "test_helpers.hpp"
#include "tomolab/gaussian.hpp"
#include "tomolab/inequalities.hpp"
#include "tomolab/tomography.hpp"

using namespace tomolab;
using namespace tomolab::testing;

namespace {
constexpr double kPi = std::numbers::pi;

// Eq.-style q-form left side assembled purely from closed forms.
double closed_form_lhs(const GaussianStateSpec& state,
                       const std::vector<SymplecticFrame>& beta_frames,
                       const QParameter& q) {
  std::vector<SymplecticFrame> alpha_frames;
  for (const auto& f : beta_frames) alpha_frames.push_back(f.conjugate());
  const double int_alpha = gaussian_renyi_integral(
      projected_covariance(state, alpha_frames), q.alpha());
  const double int_beta = gaussian_renyi_integral(
      projected_covariance(state, beta_frames), q.beta());
  return (q.q() - 1.0) / q.q() * std::log(int_alpha) +
         (q.q() + 1.0) / q.q() * std::log(int_beta);
}

std::vector<SymplecticFrame> unit_frames(const std::vector<double>& thetas) {
  std::vector<SymplecticFrame> frames;
  for (double t : thetas) frames.emplace_back(std::cos(t), std::sin(t));
  return frames;
}
}  // namespace

TEST_CASE("projected covariance closed forms") {
  SUBCASE("vacuum is isotropic") {
    for (double theta : {0.0, 0.9, 2.7}) {
      const auto g = projected_covariance(
          GaussianStateSpec::vacuum(),
          SymplecticFrame(std::cos(theta), std::sin(theta)));
      CHECK(g.covariance(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(g.mean[0] == doctest::Approx(0.0));
    }
  }
  SUBCASE("squeezed vacuum position variance") {
    const auto g = projected_covariance(GaussianStateSpec::squeezed_vacuum(1.0),
                                        SymplecticFrame(1.0, 0.0));
    CHECK(g.covariance(0, 0) ==
          doctest::Approx(std::exp(2.0) / 2.0).epsilon(1e-14));
  }
  SUBCASE("two-mode squeezed vacuum projection") {
    const auto tmsv = GaussianStateSpec::two_mode_squeezed_vacuum(1.0);
    const auto frames = unit_frames({0.0, 0.0});
    const auto g = projected_covariance(tmsv, frames);
    CHECK(g.covariance(0, 0) ==
          doctest::Approx(std::cosh(2.0) / 2.0).epsilon(1e-14));
    CHECK(g.covariance(0, 1) ==
          doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-14));
    CHECK(g.covariance.determinant() == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("frame count must match the mode count") {
    CHECK_THROWS_AS(projected_covariance(GaussianStateSpec::vacuum(2),
                                         SymplecticFrame(1.0, 0.0)),
                    WrongArityError);
  }
}

TEST_CASE("gaussian shannon entropy closed forms") {
  const ProjectedGaussian vac(Eigen::VectorXd::Zero(1),
                              0.5 * Eigen::MatrixXd::Identity(1, 1));
  CHECK(gaussian_shannon_entropy(vac).nats ==
        doctest::Approx(kHalfLnPiE).epsilon(1e-14));

  const ProjectedGaussian squeezed(
      Eigen::VectorXd::Zero(1),
      (std::exp(2.0) / 2.0) * Eigen::MatrixXd::Identity(1, 1));
  CHECK(gaussian_shannon_entropy(squeezed).nats ==
        doctest::Approx(kHalfLnPiE + 1.0).epsilon(1e-14));

  const auto tmsv_proj = projected_covariance(
      GaussianStateSpec::two_mode_squeezed_vacuum(1.0), unit_frames({0.0, 0.0}));
  CHECK(gaussian_shannon_entropy(tmsv_proj).nats ==
        doctest::Approx(kLnPiE).epsilon(1e-12));
}

TEST_CASE("gaussian renyi integral closed forms") {
  const ProjectedGaussian vac(Eigen::VectorXd::Zero(1),
                              0.5 * Eigen::MatrixXd::Identity(1, 1));
  CHECK(gaussian_renyi_integral(vac, 2.0) ==
        doctest::Approx(kVacRenyiIntAlpha2).epsilon(1e-14));
  CHECK(gaussian_renyi_integral(vac, 1.0) == doctest::Approx(1.0));
  CHECK(gaussian_renyi_integral(vac, 2.0 / 3.0) ==
        doctest::Approx(kVacRenyiIntAlpha23).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_renyi_integral(vac, 0.0), InvalidParameterError);
  CHECK_THROWS_AS(gaussian_renyi_integral(vac, -1.0), InvalidParameterError);
}

TEST_CASE("degenerate projections are rejected") {
  CHECK_THROWS_AS(ProjectedGaussian(Eigen::VectorXd::Zero(2),
                                    Eigen::MatrixXd::Zero(2, 2)),
                  DegenerateFrameError);
}

TEST_CASE("saturation identity in pure closed-form arithmetic") {
  const std::vector<double> qs = {0.1, 0.3, 0.5, 0.7, 0.9};
  SUBCASE("vacuum saturates at every angle") {
    for (double theta : {0.0, 0.4, 1.3, 2.9}) {
      for (double q : qs) {
        const double lhs = closed_form_lhs(GaussianStateSpec::vacuum(),
                                           unit_frames({theta}), QParameter(q));
        CHECK(std::abs(lhs - renyi_rhs(QParameter(q), 1)) < 1e-10);
      }
    }
  }
  SUBCASE("squeezed vacuum saturates on its principal axes") {
    for (double theta : {0.0, kPi / 2}) {
      for (double q : qs) {
        const double lhs =
            closed_form_lhs(GaussianStateSpec::squeezed_vacuum(1.0),
                            unit_frames({theta}), QParameter(q));
        CHECK(std::abs(lhs - renyi_rhs(QParameter(q), 1)) < 1e-10);
      }
    }
  }
  SUBCASE("two-mode squeezed vacuum saturates when theta1 + theta2 = 0 mod pi") {
    const auto tmsv = GaussianStateSpec::two_mode_squeezed_vacuum(1.0);
    const std::vector<std::vector<double>> angle_sets = {
        {0.0, 0.0}, {0.3, -0.3}, {0.8, kPi - 0.8}};
    for (const auto& thetas : angle_sets) {
      for (double q : qs) {
        const double lhs = closed_form_lhs(tmsv, unit_frames(thetas), QParameter(q));
        CHECK(std::abs(lhs - renyi_rhs(QParameter(q), 2)) < 1e-10);
      }
    }
    // Away from that set the inequality is strict.
    const double strict = closed_form_lhs(tmsv, unit_frames({kPi / 4, kPi / 4}),
                                          QParameter(0.5));
    CHECK(strict - renyi_rhs(QParameter(0.5), 2) > 1.0);
  }
}

TEST_CASE("determinant form of the uncertainty bound") {
  const std::vector<GaussianStateSpec> pure_states = {
      GaussianStateSpec::vacuum(), GaussianStateSpec::squeezed_vacuum(0.7)};
  for (const auto& state : pure_states) {
    for (double theta : {0.0, 0.5, 1.1, 2.3}) {
      const auto g1 = projected_covariance(
          state, SymplecticFrame(std::cos(theta), std::sin(theta)));
      const auto g2 = projected_covariance(
          state, SymplecticFrame(-std::sin(theta), std::cos(theta)));
      CHECK(g1.covariance.determinant() * g2.covariance.determinant() >=
            0.25 - 1e-12);
    }
  }
}

TEST_CASE("oracle matches the grid quadrature paths") {
  const ModeGrid grid = ModeGrid::standard();
  SUBCASE("one mode") {
    const SampledDensity w =
        optical_tomogram(GaussianStateSpec::vacuum(), RotationAngle(0.3), grid);
    const auto g = projected_covariance(GaussianStateSpec::vacuum(),
                                        SymplecticFrame::optical(RotationAngle(0.3)));
    CHECK(std::abs(shannon_entropy(w).nats - gaussian_shannon_entropy(g).nats) <
          1e-6);
    for (double alpha : {0.5, 2.0, 3.0}) {
      CHECK(std::abs(renyi_integral(w, alpha) -
                     gaussian_renyi_integral(g, alpha)) < 1e-6);
    }
  }
  SUBCASE("two modes") {
    const auto vac2 = GaussianStateSpec::vacuum(2);
    const auto frames = unit_frames({0.0, 0.0});
    const MultimodeTomogram tomo = multimode_tomogram(vac2, frames);
    const auto g = projected_covariance(vac2, frames);
    CHECK(std::abs(shannon_entropy(tomo.density).nats -
                   gaussian_shannon_entropy(g).nats) < 1e-5);
    CHECK(std::abs(renyi_integral(tomo.density, 2.0) -
                   gaussian_renyi_integral(g, 2.0)) < 1e-5);
  }
}
