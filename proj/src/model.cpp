#include "jcsim/model.hpp"

#include <cmath>

namespace jcsim {

void SystemParams::validate() const {
  if (!(g >= 0.0) || !std::isfinite(g)) throw config_error("g must be >= 0");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw config_error("kappa must be > 0");
  if (!std::isfinite(delta_a)) throw config_error("delta_a must be finite");
}

double SystemParams::f() const { return std::sqrt(kappa / (2.0 * M_PI)); }

void PulseSpec::validate() const {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw config_error("gamma0 must be > 0");
  if (!std::isfinite(omega0)) throw config_error("omega0 must be finite");
  if (!std::isfinite(t0)) throw config_error("t0 must be finite");
  if (photon_count != 1 && photon_count != 2)
    throw config_error("photon_count must be 1 or 2");
}

namespace {

std::pair<cplx, cplx> ordered(cplx base, cplx r) {
  cplx a = base + 0.5 * r;
  cplx b = base - 0.5 * r;
  if (a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()))
    std::swap(a, b);
  return {a, b};
}

}  // namespace

std::pair<cplx, cplx> single_photon_resonances(const SystemParams& p) {
  p.validate();
  cplx dt = p.delta_tilde();
  cplx r = std::sqrt(4.0 * p.g * p.g + dt * dt);
  return ordered(p.omega_c() + 0.5 * dt, r);
}

std::pair<cplx, cplx> two_photon_resonances(const SystemParams& p) {
  p.validate();
  cplx dt = p.delta_tilde();
  cplx r = std::sqrt(8.0 * p.g * p.g + dt * dt);
  return ordered(2.0 * p.omega_c() + 0.5 * dt, r);
}

Resonances resonances(const SystemParams& p) {
  auto [e1p, e1m] = single_photon_resonances(p);
  auto [e2p, e2m] = two_photon_resonances(p);
  return {e1p, e1m, e2p, e2m};
}

cplx pulse_sdf(const PulseSpec& pulse, cplx z) {
  pulse.validate();
  cplx den = (z - pulse.omega0) + cplx(0.0, 0.5 * pulse.gamma0);
  if (den == cplx(0.0, 0.0))
    throw std::domain_error("pulse_sdf evaluated at its pole omega0 - i*gamma0/2");
  cplx phase = std::exp(cplx(0.0, 1.0) * (z - pulse.omega0) * pulse.t0);
  return std::sqrt(pulse.gamma0 / (2.0 * M_PI)) * phase / den;
}

cplx pulse_time_profile(const PulseSpec& pulse, double t) {
  pulse.validate();
  if (t < pulse.t0) return {0.0, 0.0};
  return cplx(0.0, -1.0) * std::sqrt(2.0 * M_PI * pulse.gamma0) *
         std::exp(cplx(0.0, -pulse.omega0 * t)) *
         std::exp(-0.5 * pulse.gamma0 * (t - pulse.t0));
}

double single_photon_phase(const SystemParams& p, double omega) {
  auto [ep, em] = single_photon_resonances(p);
  cplx r = 1.0;
  for (cplx e : {ep, em}) {
    cplx z = omega - e;
    if (z != cplx(0.0, 0.0)) r *= std::conj(z) / z;
  }
  // principal value: the negative real axis is +pi even when the rounded
  // imaginary part is -0
  if (r.imag() == 0.0 && r.real() < 0.0) return M_PI;
  return std::arg(r);
}

}  // namespace jcsim
