#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_helpers.hpp"
#include "tomolab/states.hpp"
#include "tomolab/transforms.hpp"

using namespace tomolab;
using namespace tomolab::testing;

TEST_CASE("fock superposition normalizes its coefficients") {
  Eigen::VectorXcd c(1);
  c << 1.0;
  CHECK(FockSuperposition(c).coefficients()[0] == std::complex<double>(1.0, 0.0));

  Eigen::VectorXcd one(2);
  one << 0.0, 1.0;
  const FockSuperposition photon(one);
  CHECK(photon.coefficients()[0] == std::complex<double>(0.0, 0.0));
  CHECK(photon.coefficients()[1] == std::complex<double>(1.0, 0.0));

  Eigen::VectorXcd mixed(2);
  mixed << 3.0, std::complex<double>(0.0, 4.0);
  const FockSuperposition state(mixed);
  CHECK(state.coefficients()[0].real() == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(state.coefficients()[1].imag() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(state.coefficients().norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fock superposition rejects degenerate input") {
  CHECK_THROWS_AS(FockSuperposition(Eigen::VectorXcd::Zero(3)),
                  InvalidStateError);
  CHECK_THROWS_AS(FockSuperposition(Eigen::VectorXcd::Zero(0)),
                  InvalidStateError);
  CHECK_THROWS_AS(FockSuperposition(Eigen::VectorXcd::Ones(80)),
                  InvalidStateError);
}

TEST_CASE("gaussian state validation") {
  SUBCASE("vacuum is minimal uncertainty") {
    const auto vac = GaussianStateSpec::vacuum();
    CHECK(vac.n_modes() == 1);
    CHECK(vac.is_pure());
  }
  SUBCASE("squeezed vacuum keeps det V = 1/4") {
    const auto sq = GaussianStateSpec::squeezed_vacuum(1.0);
    CHECK(sq.covariance().determinant() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(sq.is_pure());
  }
  SUBCASE("uncertainty violation is rejected") {
    CHECK_THROWS_AS(GaussianStateSpec(Eigen::VectorXd::Zero(2),
                                      0.1 * Eigen::MatrixXd::Identity(2, 2)),
                    NonphysicalStateError);
  }
  SUBCASE("asymmetric covariance is rejected") {
    Eigen::MatrixXd v(2, 2);
    v << 0.5, 0.1, 0.0, 0.5;
    CHECK_THROWS_AS(GaussianStateSpec(Eigen::VectorXd::Zero(2), v),
                    InvalidInputError);
  }
  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(GaussianStateSpec(Eigen::VectorXd::Zero(3),
                                      Eigen::MatrixXd::Identity(3, 3)),
                    InvalidInputError);
  }
  SUBCASE("two-mode squeezed vacuum is pure and physical") {
    const auto tmsv = GaussianStateSpec::two_mode_squeezed_vacuum(1.0);
    CHECK(tmsv.n_modes() == 2);
    CHECK(tmsv.is_pure());
    CHECK_FALSE(GaussianStateSpec(Eigen::VectorXd::Zero(2),
                                  1.5 * Eigen::MatrixXd::Identity(2, 2))
                    .is_pure());
  }
}

TEST_CASE("sample_wavefunction reproduces hermite values") {
  const ModeGrid grid = centered_grid(8.0, 1025);
  const int mid = center_index(grid);
  REQUIRE(grid.point(mid) == doctest::Approx(0.0).epsilon(1e-15));

  const GridWavefunction vac = sample_wavefunction(vacuum_state(), grid);
  CHECK(std::abs(vac.samples()[mid]) == doctest::Approx(kPhi0At0).epsilon(1e-10));

  const GridWavefunction photon = sample_wavefunction(one_photon_state(), grid);
  CHECK(std::abs(photon.samples()[mid]) < 1e-14);

  const double norm =
      (vac.probability() * grid.trapezoid_weights()).sum();
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampled superpositions stay normalized up to n=20") {
  std::mt19937 rng(7);
  const ModeGrid grid = ModeGrid::standard();
  for (int trial = 0; trial < 8; ++trial) {
    const auto state = random_superposition(rng, 20);
    const GridWavefunction psi = sample_wavefunction(state, grid);
    const double norm = (psi.probability() * grid.trapezoid_weights()).sum();
    CHECK(std::abs(norm - 1.0) < 1e-10);
  }
}

TEST_CASE("pure density matrix is a normalized rank-one projector") {
  const ModeGrid grid = centered_grid(8.0, 257);
  const GridWavefunction vac = sample_wavefunction(vacuum_state(), grid);
  const DensityMatrix rho = pure_density_matrix(vac);

  const int mid = center_index(grid);
  CHECK(rho.elements()(mid, mid).real() ==
        doctest::Approx(kRho00).epsilon(1e-8));
  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-10));

  const Eigen::VectorXd spectrum = rho.spectrum();
  CHECK(spectrum[spectrum.size() - 1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(spectrum[spectrum.size() - 2]) < 1e-8);
}

TEST_CASE("density matrix invariants are enforced") {
  const ModeGrid grid = centered_grid(4.0, 64);
  SUBCASE("non-hermitian input is rejected") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(64, 64);
    m(0, 1) = 1.0;  // no conjugate partner
    m.diagonal().setConstant(1.0 / (64 * grid.spacing()));
    CHECK_THROWS_AS(DensityMatrix(grid, m), InvalidInputError);
  }
  SUBCASE("wrong trace is rejected") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(64, 64);
    CHECK_THROWS_AS(DensityMatrix(grid, m), InvalidInputError);
  }
  SUBCASE("negative spectrum is rejected") {
    // diag(2, -1, 0, ...) scaled to unit trace is Hermitian but indefinite
    Eigen::VectorXd d = Eigen::VectorXd::Zero(64);
    d[0] = 2.0 / grid.spacing();
    d[1] = -1.0 / grid.spacing();
    CHECK_THROWS_AS(
        DensityMatrix(grid, d.cast<std::complex<double>>().asDiagonal()),
        NonphysicalMatrixError);
  }
}

TEST_CASE("multimode product state caps the mode count") {
  const auto f = vacuum_state();
  CHECK(MultimodeProductState({f, f}).n_modes() == 2);
  CHECK_THROWS_AS(MultimodeProductState({f, f, f, f}), InvalidStateError);
  CHECK_THROWS_AS(MultimodeProductState({}), InvalidStateError);
}

TEST_CASE("mode grid validation") {
  CHECK_THROWS_AS(ModeGrid(1.0, -1.0, 64), InvalidInputError);
  CHECK_THROWS_AS(ModeGrid(-1.0, 1.0, 8), InvalidInputError);
  const ModeGrid g = ModeGrid::standard();
  CHECK(g.is_symmetric());
  CHECK(g.trapezoid_weights().sum() ==
        doctest::Approx(g.x_max() - g.x_min()).epsilon(1e-12));
}
