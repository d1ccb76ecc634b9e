#include "jcsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace jcsim {

namespace {

// Packed layout: [a_g, a_e, b(n), z_g, z_e, x_g(n), x_e(n), phi(n*n col-major)].
Eigen::Index packed_size(int n) { return 4 + 3 * Eigen::Index(n) + Eigen::Index(n) * n; }

struct RhsCtx {
  SystemParams p;
  PulseSpec pulse;
  int n;
  double g, f, drive_scale, xi_amp;
  cplx wc, wa;
  Eigen::ArrayXcd om, om_wc, om_wa;  // omega, omega + wc, omega + wa
  Eigen::ArrayXd omr;

  RhsCtx(const SystemParams& p_, const PulseSpec& pu, const FrequencyGrid& grid, double scale)
      : p(p_), pulse(pu), n(grid.n()), g(p_.g), f(p_.f()), drive_scale(scale),
        xi_amp(std::sqrt(2.0 * M_PI * pu.gamma0)), wc(p_.omega_c()), wa(p_.omega_a()),
        omr(grid.omega) {
    om = grid.omega.cast<cplx>();
    om_wc = om + wc;
    om_wa = om + wa;
  }

  // Xi(t) without the step function; segments decide whether the drive is on.
  cplx xi(double t) const {
    return drive_scale * cplx(0.0, -1.0) * xi_amp * std::exp(cplx(0.0, -pulse.omega0 * t)) *
           std::exp(-0.5 * pulse.gamma0 * (t - pulse.t0));
  }

  void one_exc(cplx Xi, cplx a_g, cplx a_e, const Eigen::Ref<const Eigen::VectorXcd>& b,
               cplx& da_g, cplx& da_e, Eigen::Ref<Eigen::VectorXcd> db) const {
    const cplx mi(0.0, -1.0);
    da_g = mi * (wc * a_g + g * a_e + f * Xi);
    da_e = mi * (wa * a_e + g * a_g);
    db = mi * (om * b.array() + f * a_g).matrix();
  }

  void two_exc(cplx Xi, cplx a_g, cplx a_e, const Eigen::Ref<const Eigen::VectorXcd>& b,
               const Eigen::Ref<const Eigen::MatrixXcd>& phi,
               const Eigen::Ref<const Eigen::VectorXcd>& x_g,
               const Eigen::Ref<const Eigen::VectorXcd>& x_e, cplx z_g, cplx z_e,
               Eigen::Ref<Eigen::MatrixXcd> dphi, Eigen::Ref<Eigen::VectorXcd> dx_g,
               Eigen::Ref<Eigen::VectorXcd> dx_e, cplx& dz_g, cplx& dz_e) const {
    const cplx mi(0.0, -1.0);
    const double r2 = std::sqrt(2.0);
    dz_g = mi * (2.0 * wc * z_g + 2.0 * f * Xi * a_g + r2 * g * z_e);
    dz_e = mi * ((wc + wa) * z_e + r2 * f * Xi * a_e + r2 * g * z_g);
    dx_g = mi * (om_wc * x_g.array() + r2 * f * Xi * b.array() + g * x_e.array() + r2 * f * z_g)
               .matrix();
    dx_e = mi * (om_wa * x_e.array() + g * x_g.array() + f * z_e).matrix();
    const cplx c = mi * f / r2;
    for (int k = 0; k < n; ++k)
      dphi.col(k) = mi * ((om + omr[k]) * phi.col(k).array()).matrix() +
                    c * (x_g.array() + x_g[k]).matrix();
  }

  void packed(double t, const cvec& y, cvec& dy, bool drive_on) const {
    cplx Xi = drive_on ? xi(t) : cplx(0.0, 0.0);
    cplx da_g, da_e, dz_g, dz_e;
    Eigen::Map<const Eigen::MatrixXcd> phi(y.data() + 4 + 3 * n, n, n);
    Eigen::Map<Eigen::MatrixXcd> dphi(dy.data() + 4 + 3 * n, n, n);
    one_exc(Xi, y[0], y[1], y.segment(2, n), da_g, da_e, dy.segment(2, n));
    two_exc(Xi, y[0], y[1], y.segment(2, n), phi, y.segment(4 + n, n), y.segment(4 + 2 * n, n),
            y[2 + n], y[3 + n], dphi, dy.segment(4 + n, n), dy.segment(4 + 2 * n, n), dz_g,
            dz_e);
    dy[0] = da_g;
    dy[1] = da_e;
    dy[2 + n] = dz_g;
    dy[3 + n] = dz_e;
  }
};

void pack(const OneExcState& one, const TwoExcState& two, cvec& y) {
  const int n = static_cast<int>(one.b.size());
  y[0] = one.a_g;
  y[1] = one.a_e;
  y.segment(2, n) = one.b;
  y[2 + n] = two.z_g;
  y[3 + n] = two.z_e;
  y.segment(4 + n, n) = two.x_g;
  y.segment(4 + 2 * n, n) = two.x_e;
  Eigen::Map<Eigen::MatrixXcd>(y.data() + 4 + 3 * n, n, n) = two.phi;
}

void unpack(const cvec& y, int n, OneExcState& one, TwoExcState& two) {
  one.a_g = y[0];
  one.a_e = y[1];
  one.b = y.segment(2, n);
  two.z_g = y[2 + n];
  two.z_e = y[3 + n];
  two.x_g = y.segment(4 + n, n);
  two.x_e = y.segment(4 + 2 * n, n);
  two.phi = Eigen::Map<const Eigen::MatrixXcd>(y.data() + 4 + 3 * n, n, n);
}

}  // namespace

double pulse_grid_scale(const PulseSpec& pulse, const FrequencyGrid& grid) {
  pulse.validate();
  double s = 0.0;
  for (int k = 0; k < grid.n(); ++k)
    s += std::norm(pulse_sdf(pulse, grid.omega[k])) * grid.weight[k];
  // the packet has unit continuum norm, so any grid that sees it at all
  // samples far more than this floor; below it the 1/sqrt(s) rescale is noise
  if (!(s > 1e-12) || !std::isfinite(s))
    throw config_error("pulse has no weight on the frequency grid");
  return 1.0 / std::sqrt(s);
}

InitialStates initial_states(const PulseSpec& pulse, const FrequencyGrid& grid) {
  const int n = grid.n();
  InitialStates st;
  st.scale = pulse_grid_scale(pulse, grid);
  st.one = OneExcState::zero(n);
  st.two = TwoExcState::zero(n);
  Eigen::VectorXcd xi(n);
  for (int k = 0; k < n; ++k) xi[k] = pulse_sdf(pulse, grid.omega[k]);
  st.one.b = st.scale * xi;
  st.two.phi = (st.scale * st.scale) * (xi * xi.transpose());
  return st;
}

void rhs_one(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid, double t,
             const OneExcState& s, OneExcState& dsdt, double drive_scale) {
  p.validate();
  RhsCtx ctx(p, pulse, grid, drive_scale);
  dsdt.b.resize(grid.n());
  cplx Xi = (t >= pulse.t0) ? ctx.xi(t) : cplx(0.0, 0.0);
  ctx.one_exc(Xi, s.a_g, s.a_e, s.b, dsdt.a_g, dsdt.a_e, dsdt.b);
}

void rhs_two(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid, double t,
             const OneExcState& one, const TwoExcState& s, TwoExcState& dsdt,
             double drive_scale) {
  p.validate();
  const int n = grid.n();
  RhsCtx ctx(p, pulse, grid, drive_scale);
  dsdt.phi.resize(n, n);
  dsdt.x_g.resize(n);
  dsdt.x_e.resize(n);
  cplx Xi = (t >= pulse.t0) ? ctx.xi(t) : cplx(0.0, 0.0);
  ctx.two_exc(Xi, one.a_g, one.a_e, one.b, s.phi, s.x_g, s.x_e, s.z_g, s.z_e, dsdt.phi,
              dsdt.x_g, dsdt.x_e, dsdt.z_g, dsdt.z_e);
}

Trajectory evolve(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid,
                  const EvolveOptions& opts) {
  p.validate();
  pulse.validate();
  if (pulse.t0 < 0.0) throw config_error("t0 must be >= 0 for time evolution");
  if (!(opts.t_end > 0.0) || !std::isfinite(opts.t_end))
    throw config_error("t_end must be > 0");
  if (!(opts.output_dt > 0.0)) throw config_error("output_dt must be > 0");

  if (opts.warn) {
    if (auto w = coverage_warning(p, pulse, grid)) std::cerr << "warning: " << *w << "\n";
  }

  const int n = grid.n();
  std::vector<double> outs = opts.output_times;
  if (outs.empty()) {
    long nout = static_cast<long>(std::floor(opts.t_end / opts.output_dt * (1.0 + 1e-12)));
    for (long i = 0; i <= nout; ++i) {
      double t = i * opts.output_dt;
      if (t <= opts.t_end) outs.push_back(t);
    }
    if (outs.back() < opts.t_end) outs.push_back(opts.t_end);
  }
  std::vector<double> snaps = opts.snapshot_times;
  std::sort(outs.begin(), outs.end());
  std::sort(snaps.begin(), snaps.end());
  for (double t : outs)
    if (t < 0.0 || t > opts.t_end) throw config_error("output_times must lie in [0, t_end]");
  for (double t : snaps)
    if (t < 0.0 || t > opts.t_end) throw config_error("snapshot_times must lie in [0, t_end]");

  std::vector<double> events;
  std::merge(outs.begin(), outs.end(), snaps.begin(), snaps.end(), std::back_inserter(events));
  events.erase(std::unique(events.begin(), events.end()), events.end());

  InitialStates init = initial_states(pulse, grid);
  cvec y(packed_size(n));
  pack(init.one, init.two, y);

  RhsCtx ctx(p, pulse, grid, init.scale);
  Trajectory traj;
  traj.scale = init.scale;

  OneExcState sone;
  TwoExcState stwo;
  auto record = [&](double t, const cvec& yy) {
    unpack(yy, n, sone, stwo);
    if (std::binary_search(outs.begin(), outs.end(), t)) {
      traj.times.push_back(t);
      traj.obs.push_back(observables(stwo, grid));
      traj.norm1.push_back(one_exc_norm(sone, grid));
    }
    if (std::binary_search(snaps.begin(), snaps.end(), t))
      traj.snapshots.push_back({t, sone, stwo});
  };

  OdeOptions oo;
  oo.rtol = opts.rtol;
  oo.atol = opts.atol;

  double tsplit = std::min(pulse.t0, opts.t_end);
  auto lower = std::upper_bound(events.begin(), events.end(), tsplit);
  std::vector<double> ev_a(events.begin(), lower), ev_b(lower, events.end());

  auto rhs_off = [&ctx](double t, const cvec& yy, cvec& dyy) { ctx.packed(t, yy, dyy, false); };
  auto rhs_on = [&ctx](double t, const cvec& yy, cvec& dyy) { ctx.packed(t, yy, dyy, true); };
  y = integrate(rhs_off, std::move(y), 0.0, tsplit, ev_a, record, oo);
  y = integrate(rhs_on, std::move(y), tsplit, opts.t_end, ev_b, record, oo);
  return traj;
}

}  // namespace jcsim
