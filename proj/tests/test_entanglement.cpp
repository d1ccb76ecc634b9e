#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "jcsim/entanglement.hpp"

using namespace jcsim;

namespace {
ScatteredSDF resonant_sdf(double g, int n = 100) {
  SystemParams sys{g, 1.0, 0.0};
  PulseSpec pulse;
  pulse.gamma0 = 0.2;
  pulse.omega0 = single_photon_resonances(sys).first.real();
  FrequencyGrid grid = make_grid(pulse.omega0, 25.0 * pulse.gamma0, n);
  return scattered_pair_sdf(sys, pulse, grid, pulse.gamma0);
}
}  // namespace

TEST_CASE("kernel is Hermitian and detects separable pairs") {
  ScatteredSDF sdf = resonant_sdf(0.0);
  Eigen::MatrixXcd k = build_kernel(sdf);
  CHECK((k - k.adjoint()).cwiseAbs().maxCoeff() < 1e-15 * k.cwiseAbs().maxCoeff());
  SchmidtResult res = schmidt(k, sdf.grid, 3);
  CHECK(std::abs(res.lambdas[0] - 1.0) < 1e-12);
  CHECK(res.lambdas[1] < 1e-12);
  CHECK(res.entropy < 1e-10);
  // the dominant mode is the elastically scattered packet, continuum-normalized
  double norm = (res.modes.col(0).cwiseAbs2().sum()) * sdf.grid.domega();
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mode ladder of a strongly coupled resonant drive") {
  SchmidtResult res;
  {
    ScatteredSDF sdf = resonant_sdf(2.0);
    res = schmidt(build_kernel(sdf), sdf.grid, 5);
  }
  REQUIRE(res.lambdas.size() == 100);
  REQUIRE(res.modes.cols() == 5);
  // descending, clamped, unit-sum
  for (int j = 1; j < res.lambdas.size(); ++j) CHECK(res.lambdas[j] <= res.lambdas[j - 1]);
  CHECK(res.lambdas.minCoeff() >= 0.0);
  CHECK(res.lambdas.sum() == doctest::Approx(1.0).epsilon(1e-12));
  // frozen ladder for this configuration
  CHECK(std::abs(res.lambdas[0] - 0.621372) < 2e-5);
  CHECK(std::abs(res.lambdas[1] - 0.182515) < 2e-5);
  CHECK(std::abs(res.lambdas[2] - 0.096304) < 2e-5);
  CHECK(std::abs(res.lambdas[3] - 0.046190) < 2e-5);
  CHECK(std::abs(res.lambdas[4] - 0.017498) < 2e-5);
  CHECK(std::abs(res.entropy - 1.80577) < 1e-4);
  // every retained mode is continuum-normalized
  for (int j = 0; j < res.modes.cols(); ++j) {
    double norm = res.modes.col(j).cwiseAbs2().sum() * res.grid.domega();
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("mode ladder deep in the strong-coupling regime") {
  ScatteredSDF sdf = resonant_sdf(10.0);
  SchmidtResult res = schmidt(build_kernel(sdf), sdf.grid, 5);
  CHECK(std::abs(res.lambdas[0] - 0.578953) < 2e-5);
  CHECK(std::abs(res.lambdas[1] - 0.170143) < 2e-5);
  CHECK(std::abs(res.lambdas[2] - 0.134010) < 2e-5);
  CHECK(std::abs(res.lambdas[3] - 0.065930) < 2e-5);
  CHECK(std::abs(res.lambdas[4] - 0.020463) < 2e-5);
  CHECK(std::abs(res.entropy - 1.88895) < 1e-4);
}

TEST_CASE("kernel guards") {
  FrequencyGrid grid = make_grid(0.0, 1.0, 4);
  // kernel/grid size mismatch
  CHECK_THROWS_AS(schmidt(Eigen::MatrixXcd::Identity(3, 3), grid, 2), config_error);
  // genuinely negative spectrum is a numerical failure, not a clamp
  Eigen::MatrixXcd bad = -1e-5 * Eigen::MatrixXcd::Identity(4, 4);
  CHECK_THROWS_AS(schmidt(bad, grid, 2), numerical_error);
  // tiny negative noise is clamped to zero instead
  Eigen::MatrixXcd noisy = Eigen::MatrixXcd::Zero(4, 4);
  noisy(0, 0) = 1.0;
  noisy(1, 1) = -1e-12;
  SchmidtResult res = schmidt(noisy, grid, 4);
  CHECK(res.lambdas.minCoeff() == 0.0);
  CHECK(res.lambdas[0] == doctest::Approx(1.0).epsilon(1e-12));
  // all-zero kernel cannot be normalized
  CHECK_THROWS_AS(schmidt(Eigen::MatrixXcd::Zero(4, 4), grid, 2), numerical_error);
  // requesting more modes than grid points clamps
  CHECK(schmidt(Eigen::MatrixXcd::Identity(4, 4), grid, 50).modes.cols() == 4);
}

TEST_CASE("entropy in bits") {
  Eigen::VectorXd lam(4);
  lam << 0.25, 0.25, 0.25, 0.25;
  CHECK(entropy(lam) == doctest::Approx(2.0).epsilon(1e-14));
  Eigen::VectorXd pure(3);
  pure << 1.0, 0.0, 1e-16;  // zeros and sub-threshold weights are skipped
  CHECK(entropy(pure) == 0.0);
  Eigen::VectorXd neg(2);
  neg << 1.1, -0.1;
  CHECK_THROWS_AS(entropy(neg), config_error);
}

TEST_CASE("symmetric amplitudes rebuild from their modes") {
  // deterministic pseudo-random symmetric matrix
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int n = 24;
  Eigen::MatrixXcd phi(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      cplx v(u(rng), u(rng));
      phi(j, k) = v;
      phi(k, j) = v;
    }
  CHECK(reconstruction_error(phi) < 1e-8);
  // and the physical scattered pair
  ScatteredSDF sdf = resonant_sdf(2.0);
  CHECK(reconstruction_error(sdf.total) < 1e-3);
}
