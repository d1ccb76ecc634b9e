#include "jcsim/spectrum.hpp"

#include <cmath>

namespace jcsim {

Eigen::ArrayXd input_spectrum(const PulseSpec& pulse, const FrequencyGrid& grid) {
  Eigen::ArrayXd s(grid.n());
  for (int k = 0; k < grid.n(); ++k) s[k] = 2.0 * std::norm(pulse_sdf(pulse, grid.omega[k]));
  return s;
}

double integrate_grid(const Eigen::ArrayXd& values, const FrequencyGrid& grid) {
  return (values * grid.weight).sum();
}

double input_tail_estimate(const PulseSpec& pulse, const FrequencyGrid& grid) {
  double lo = grid.omega[0], hi = grid.omega[grid.n() - 1];
  double inside = (std::atan(2.0 * (hi - pulse.omega0) / pulse.gamma0) -
                   std::atan(2.0 * (lo - pulse.omega0) / pulse.gamma0)) /
                  M_PI;
  return 2.0 * (1.0 - inside);
}

SpectrumResult output_spectrum(const ScatteredSDF& sdf) {
  const double d = sdf.grid.domega();
  SpectrumResult r;
  r.grid = sdf.grid;
  r.s_in = 2.0 * d * sdf.elastic.cwiseAbs2().rowwise().sum().array();
  r.s_inel = 2.0 * d * sdf.inelastic.cwiseAbs2().rowwise().sum().array();
  r.s_out = 2.0 * d * sdf.total.cwiseAbs2().rowwise().sum().array();
  r.s_el_in =
      4.0 * d *
      (sdf.elastic.conjugate().cwiseProduct(sdf.inelastic)).real().rowwise().sum().array();
  r.int_s_in = integrate_grid(r.s_in, sdf.grid);
  r.int_s_out = integrate_grid(r.s_out, sdf.grid);
  return r;
}

}  // namespace jcsim
