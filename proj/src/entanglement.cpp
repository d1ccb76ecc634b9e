#include "jcsim/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "jcsim/errors.hpp"

namespace jcsim {

Eigen::MatrixXcd build_kernel(const Eigen::MatrixXcd& amplitude, const FrequencyGrid& grid) {
  // K = conj(Phi) Phi^T domega; by the symmetry of Phi this equals the kernel
  // of either photon, so only one is ever built.
  return (amplitude.conjugate() * amplitude.transpose()) * grid.domega();
}

Eigen::MatrixXcd build_kernel(const ScatteredSDF& sdf) {
  return build_kernel(sdf.total, sdf.grid);
}

SchmidtResult schmidt(const Eigen::MatrixXcd& kernel, const FrequencyGrid& grid, int n_modes) {
  const int n = grid.n();
  if (kernel.rows() != n || kernel.cols() != n)
    throw config_error("schmidt: kernel does not match the grid");
  if (n_modes < 0) throw config_error("schmidt: n_modes must be >= 0");
  n_modes = std::min(n_modes, n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kernel * grid.domega());
  if (es.info() != Eigen::Success)
    throw numerical_error("schmidt: eigensolver failed to converge");

  // Ascending from Eigen; flip to descending.
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  for (int i = 0; i < n; ++i) {
    if (ev[i] < -1e-10) {
      std::ostringstream msg;
      msg << "schmidt: eigenvalue " << ev[i] << " below the clamping floor";
      throw numerical_error(msg.str());
    }
    if (ev[i] < 0.0) ev[i] = 0.0;
  }
  double sum = ev.sum();
  if (!(sum > 0.0)) throw numerical_error("schmidt: zero kernel");

  SchmidtResult r;
  r.grid = grid;
  r.lambdas = ev / sum;
  r.modes.resize(n, n_modes);
  double root_d = std::sqrt(grid.domega());
  for (int j = 0; j < n_modes; ++j) r.modes.col(j) = es.eigenvectors().col(n - 1 - j) / root_d;
  r.entropy = entropy(r.lambdas);
  return r;
}

double reconstruction_error(const Eigen::MatrixXcd& phi) {
  const int n = static_cast<int>(phi.rows());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(phi, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::MatrixXcd rec = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double s = svd.singularValues()[j];
    if (s <= 0.0) continue;
    // For symmetric phi the left/right singular vectors match up to a phase;
    // splitting that phase evenly turns the SVD into a Takagi factorization
    // phi = sum_j s_j u_j u_j^T.
    cplx c = svd.matrixU().col(j).dot(svd.matrixV().col(j).conjugate());
    Eigen::VectorXcd u =
        std::exp(cplx(0.0, 0.5 * std::arg(c))) * svd.matrixU().col(j);
    rec.noalias() += s * (u * u.transpose());
  }
  return (rec - phi).norm() / phi.norm();
}

double entropy(const Eigen::VectorXd& lambdas) {
  double s = 0.0;
  for (int i = 0; i < lambdas.size(); ++i) {
    double l = lambdas[i];
    if (l < 0.0) throw config_error("entropy: lambdas must be nonnegative");
    if (l < 1e-14) continue;
    s -= l * std::log2(l);
  }
  return s;
}

}  // namespace jcsim
