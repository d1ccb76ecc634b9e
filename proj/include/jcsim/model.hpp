#pragma once

#include <complex>
#include <utility>

#include "jcsim/errors.hpp"

namespace jcsim {

using cplx = std::complex<double>;

// Frame rotating at the cavity line: the (lossy) cavity sits at -i*kappa/2
// on the complex frequency plane and the atom at delta_a on the real axis.
// kappa = 1 fixes the frequency unit.
struct SystemParams {
  double g = 2.0;        // atom-cavity coupling
  double kappa = 1.0;    // cavity linewidth
  double delta_a = 0.0;  // atom-cavity detuning

  void validate() const;
  double f() const;  // per-mode waveguide coupling sqrt(kappa/2pi)
  cplx omega_c() const { return {0.0, -0.5 * kappa}; }
  cplx omega_a() const { return {delta_a, 0.0}; }
  cplx delta_tilde() const { return omega_a() - omega_c(); }
};

// Lorentzian (one-sided exponential) input packet.
struct PulseSpec {
  double gamma0 = 0.2;   // packet bandwidth
  double omega0 = 0.0;   // carrier frequency, relative to the cavity line
  double t0 = 0.0;       // switch-on time of the packet front
  int photon_count = 2;  // 1 or 2 identical Fock photons

  void validate() const;
  double tau_p() const { return 1.0 / gamma0; }
};

// Dressed-ladder poles of the first two excitation manifolds.
struct Resonances {
  cplx e1_plus, e1_minus;
  cplx e2_plus, e2_minus;
};

// "+" always labels the root with the larger real part (larger imaginary
// part on real-part ties).
std::pair<cplx, cplx> single_photon_resonances(const SystemParams& p);
std::pair<cplx, cplx> two_photon_resonances(const SystemParams& p);
Resonances resonances(const SystemParams& p);

// Spectral density xi(z) of the packet, complex-continued.
// Throws std::domain_error exactly at the pole z = omega0 - i*gamma0/2.
cplx pulse_sdf(const PulseSpec& pulse, cplx z);

// Time profile Xi(t): switched-on decaying exponential, |Xi(t0+)|^2 = 2*pi*gamma0.
cplx pulse_time_profile(const PulseSpec& pulse, double t);

// Phase of the single-photon transmission coefficient at real omega;
// the coefficient itself is the unimodular product over both polariton poles.
double single_photon_phase(const SystemParams& p, double omega);

}  // namespace jcsim
