#pragma once

#include <Eigen/Core>

#include "jcsim/analytic.hpp"
#include "jcsim/grid.hpp"

namespace jcsim {

// Schmidt spectrum of a symmetric two-photon amplitude.
struct SchmidtResult {
  Eigen::VectorXd lambdas;   // descending, clamped at 0, normalized to unit sum
  Eigen::MatrixXcd modes;    // n x m columns, continuum-normalized: sum |phi|^2 domega = 1
  double entropy = 0.0;      // von Neumann entropy in bits
  FrequencyGrid grid;
};

// K[a,b] = sum_c conj(total[a,c]) total[b,c] domega; Hermitian by construction.
Eigen::MatrixXcd build_kernel(const ScatteredSDF& sdf);
Eigen::MatrixXcd build_kernel(const Eigen::MatrixXcd& amplitude, const FrequencyGrid& grid);

// Quadrature-weighted Hermitian eigenproblem of the kernel; keeps n_modes
// mode columns. Eigenvalues below -1e-10 indicate a broken kernel and raise
// numerical_error; small negative noise is clamped to zero.
SchmidtResult schmidt(const Eigen::MatrixXcd& kernel, const FrequencyGrid& grid, int n_modes);

// Von Neumann entropy in bits, skipping lambda < 1e-14 (0 log 0 := 0).
double entropy(const Eigen::VectorXd& lambdas);

// Oracle: rebuild the amplitude as sum_j s_j u_j u_j^T (Takagi factorization
// via SVD phase matching); returns the relative Frobenius error. Mode and
// eigenvalue normalization conventions cancel in this ratio.
double reconstruction_error(const Eigen::MatrixXcd& amplitude);

}  // namespace jcsim
