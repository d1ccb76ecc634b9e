#pragma once

#include <Eigen/Core>

#include "jcsim/analytic.hpp"
#include "jcsim/grid.hpp"

namespace jcsim {

// One-photon spectra. s_el_in (elastic/inelastic interference) may be
// negative; the other three are nonnegative, and
// s_out = s_in + s_inel + s_el_in holds pointwise by construction.
struct SpectrumResult {
  FrequencyGrid grid;
  Eigen::ArrayXd s_in, s_out, s_inel, s_el_in;
  // Trapezoidal integrals plus the analytic Lorentzian mass outside the
  // window (quadrature-tail metadata for conservation checks).
  double int_s_in = 0.0, int_s_out = 0.0, tail_estimate = 0.0;
};

// Spectrum of the two-photon input packet, 2|xi|^2.
Eigen::ArrayXd input_spectrum(const PulseSpec& pulse, const FrequencyGrid& grid);

// Marginal spectra of the scattered pair and their decomposition.
SpectrumResult output_spectrum(const ScatteredSDF& sdf);

// Fraction of the (two-photon) input spectral mass outside the grid window.
double input_tail_estimate(const PulseSpec& pulse, const FrequencyGrid& grid);

// Trapezoidal integral of samples on the grid.
double integrate_grid(const Eigen::ArrayXd& values, const FrequencyGrid& grid);

}  // namespace jcsim
