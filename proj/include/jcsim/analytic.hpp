#pragma once

#include <Eigen/Core>

#include "jcsim/grid.hpp"
#include "jcsim/states.hpp"

namespace jcsim {

// Exact single-excitation amplitudes at time t, continuum pulse normalization.
OneExcState one_exc_closed_form(const SystemParams& p, const PulseSpec& pulse,
                                const FrequencyGrid& grid, double t);

// Long-time single-photon output: the input packet times the unimodular
// transmission phase.
cplx scattered_single_sdf(const SystemParams& p, const PulseSpec& pulse, double omega);

// Long-time two-photon output split into the elastically scattered packet and
// the inelastic (frequency-redistributed) part; total = elastic + inelastic.
struct ScatteredSDF {
  Eigen::MatrixXcd elastic, inelastic, total;
  FrequencyGrid grid;
  double gamma_reg = 0.0;
};

// gamma_reg regulates the two-photon pole of the inelastic amplitude; the
// packet bandwidth gamma0 is the physically pinned choice (see the oracle
// tests against the full transient).
ScatteredSDF scattered_pair_sdf(const SystemParams& p, const PulseSpec& pulse,
                                const FrequencyGrid& grid, double gamma_reg);

// Exact two-photon amplitude Phi(omega_j, omega_k; t) from the closed-form
// cascade of driven 2x2 blocks (continuum normalization).
Eigen::MatrixXcd two_exc_transient(const SystemParams& p, const PulseSpec& pulse,
                                   const FrequencyGrid& grid, double t);

}  // namespace jcsim
