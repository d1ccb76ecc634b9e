#pragma once

#include <Eigen/Core>

#include "jcsim/grid.hpp"

namespace jcsim {

// Single-excitation amplitudes.
struct OneExcState {
  cplx a_g{0.0, 0.0};  // cavity excited, atom in g
  cplx a_e{0.0, 0.0};  // atom excited, cavity empty
  Eigen::VectorXcd b;  // one waveguide photon at omega_k

  static OneExcState zero(int n);
};

// Two-excitation amplitudes; phi is symmetric in its two frequencies.
struct TwoExcState {
  Eigen::MatrixXcd phi;  // two waveguide photons (omega_j, omega_k)
  Eigen::VectorXcd x_g;  // one photon + cavity excited
  Eigen::VectorXcd x_e;  // one photon + atom excited
  cplx z_g{0.0, 0.0};    // two cavity quanta
  cplx z_e{0.0, 0.0};    // one cavity quantum + excited atom

  static TwoExcState zero(int n);
};

struct Observables {
  double n_c = 0.0;    // mean cavity photon number
  double p_a = 0.0;    // atomic excitation probability
  double p1 = 0.0;     // one excitation inside the JC system
  double p2 = 0.0;     // two excitations inside the JC system
  double norm2 = 0.0;  // total two-excitation norm
};

double one_exc_norm(const OneExcState& s, const FrequencyGrid& grid);
Observables observables(const TwoExcState& s, const FrequencyGrid& grid);

}  // namespace jcsim
