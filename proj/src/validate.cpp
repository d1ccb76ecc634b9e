#include "jcsim/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "jcsim/analytic.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/entanglement.hpp"
#include "jcsim/model.hpp"
#include "jcsim/spectrum.hpp"
#include "jcsim/version.hpp"

namespace jcsim {
namespace {

struct Reporter {
  std::ostream& os;
  int count = 0;
  int failures = 0;

  void check(const char* name, double value, double tol) {
    bool ok = value <= tol;  // NaN counts as a failure
    char line[160];
    std::snprintf(line, sizeof line, "  [%s] %-44s %10.3e  (tol %.1e)\n",
                  ok ? " ok " : "FAIL", name, value, tol);
    os << line;
    ++count;
    if (!ok) ++failures;
  }
};

// Sum and product of each resonance pair against the trace/determinant of the
// corresponding 2x2 block.
double resonance_residual() {
  double worst = 0.0;
  const double gs[] = {0.0, 0.3, 2.0, 5.0, 10.0};
  const double das[] = {0.0, 0.7, -1.2};
  for (double g : gs)
    for (double da : das) {
      SystemParams p{g, 1.0, da};
      cplx wc = p.omega_c(), wa = p.omega_a();
      auto [e1p, e1m] = single_photon_resonances(p);
      auto [e2p, e2m] = two_photon_resonances(p);
      worst = std::max(worst, std::abs(e1p + e1m - (wc + wa)));
      worst = std::max(worst, std::abs(e1p * e1m - (wc * wa - g * g)));
      worst = std::max(worst, std::abs(e2p + e2m - (3.0 * wc + wa)));
      worst = std::max(worst, std::abs(e2p * e2m - (2.0 * wc * (wc + wa) - 2.0 * g * g)));
    }
  return worst;
}

// Fourth-order finite-difference time derivative of the closed-form
// one-excitation amplitudes against the equations of motion.
double eom_residual(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid,
                    double t) {
  const double h = 1e-3;
  OneExcState yp2 = one_exc_closed_form(p, pulse, grid, t + 2 * h);
  OneExcState yp1 = one_exc_closed_form(p, pulse, grid, t + h);
  OneExcState ym1 = one_exc_closed_form(p, pulse, grid, t - h);
  OneExcState ym2 = one_exc_closed_form(p, pulse, grid, t - 2 * h);
  OneExcState y = one_exc_closed_form(p, pulse, grid, t);
  OneExcState rhs = OneExcState::zero(grid.n());
  rhs_one(p, pulse, grid, t, y, rhs);
  auto fd = [&](cplx p2, cplx p1, cplx m1, cplx m2) {
    return (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
  };
  double worst = std::abs(fd(yp2.a_g, yp1.a_g, ym1.a_g, ym2.a_g) - rhs.a_g);
  worst = std::max(worst, std::abs(fd(yp2.a_e, yp1.a_e, ym1.a_e, ym2.a_e) - rhs.a_e));
  for (int k = 0; k < grid.n(); ++k)
    worst = std::max(worst, std::abs(fd(yp2.b[k], yp1.b[k], ym1.b[k], ym2.b[k]) - rhs.b[k]));
  return worst;
}

}  // namespace

int run_validation(std::ostream& os) {
  auto t_start = std::chrono::steady_clock::now();
  os << "jcsim " << version << " validation suite\n";
  Reporter rep{os};

  rep.check("resonance sum and product rules", resonance_residual(), 1e-12);

  SystemParams sys{2.0, 1.0, 0.0};
  PulseSpec pulse;
  pulse.gamma0 = 0.2;
  pulse.omega0 = single_photon_resonances(sys).first.real();
  pulse.t0 = 0.0;
  pulse.photon_count = 2;
  // dω must resolve the packet linewidth gamma0, else the sampled norm wobbles
  FrequencyGrid grid = make_grid(0.0, sys.g + 5.0, 128);

  rep.check("closed-form equations of motion residual", eom_residual(sys, pulse, grid, 3.7),
            1e-6);

  EvolveOptions opts;
  opts.t_end = 60.0;
  opts.output_times = {0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0};
  opts.snapshot_times = {1.5, 3.0, 6.0};
  Trajectory traj = evolve(sys, pulse, grid, opts);
  const double a = traj.scale;

  double e_one = 0.0, e_two = 0.0, peak = 0.0;
  for (const Snapshot& snap : traj.snapshots) {
    OneExcState ref = one_exc_closed_form(sys, pulse, grid, snap.t);
    e_one = std::max(e_one, std::abs(snap.one.a_g - a * ref.a_g));
    e_one = std::max(e_one, std::abs(snap.one.a_e - a * ref.a_e));
    e_one = std::max(e_one, (snap.one.b - a * ref.b).cwiseAbs().maxCoeff());
    Eigen::MatrixXcd phi_ref = a * a * two_exc_transient(sys, pulse, grid, snap.t);
    e_two = std::max(e_two, (snap.two.phi - phi_ref).cwiseAbs().maxCoeff());
    peak = std::max(peak, phi_ref.cwiseAbs().maxCoeff());
  }
  rep.check("one-photon closed form vs integrator", e_one, 1e-6);
  rep.check("two-photon closed form vs integrator", e_two / peak, 1e-4);

  double drift = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    drift = std::max(drift, std::abs(traj.obs[i].norm2 - 1.0));
    drift = std::max(drift, std::abs(traj.norm1[i] - 1.0));
  }
  rep.check("norm conservation on the truncated grid", drift, 5e-2);

  ScatteredSDF sdf = scattered_pair_sdf(sys, pulse, grid, pulse.gamma0);
  Eigen::MatrixXcd trans = two_exc_transient(sys, pulse, grid, opts.t_end);
  Eigen::VectorXcd ph(grid.n());
  for (int k = 0; k < grid.n(); ++k)
    ph[k] = std::exp(cplx(0.0, grid.omega[k] * opts.t_end));
  Eigen::MatrixXcd rotated = ph.asDiagonal() * trans * ph.asDiagonal();
  rep.check("scattered pair amplitude vs late transient",
            (rotated - sdf.total).norm() / sdf.total.norm(), 2e-2);

  SpectrumResult sp = output_spectrum(sdf);
  double ident = (sp.s_out - (sp.s_in + sp.s_inel + sp.s_el_in)).abs().maxCoeff();
  ident = std::max(ident, std::max(0.0, -sp.s_out.minCoeff()));
  rep.check("spectrum decomposition identity", ident, 1e-10);

  double unit = 0.0;
  for (int k = 0; k < grid.n(); ++k)
    unit = std::max(unit, std::abs(std::abs(scattered_single_sdf(sys, pulse, grid.omega[k])) -
                                   std::abs(pulse_sdf(pulse, grid.omega[k]))));
  rep.check("one-photon scattering is unitary", unit, 1e-12);

  rep.check("scattered pair mode reconstruction", reconstruction_error(sdf.total), 1e-3);

  SystemParams empty{0.0, 1.0, 0.0};
  FrequencyGrid pgrid = make_grid(pulse.omega0, 25.0 * pulse.gamma0, 100);
  ScatteredSDF sdf0 = scattered_pair_sdf(empty, pulse, pgrid, pulse.gamma0);
  SpectrumResult sp0 = output_spectrum(sdf0);
  rep.check("empty-cavity spectrum passes through",
            (sp0.s_out - sp0.s_in).abs().maxCoeff(), 1e-10);
  SchmidtResult sr0 = schmidt(build_kernel(sdf0), pgrid, 5);
  rep.check("empty-cavity pair is separable (1 - lambda_1)", std::abs(sr0.lambdas[0] - 1.0),
            1e-6);
  rep.check("empty-cavity entanglement entropy", sr0.entropy, 1e-3);

  ScatteredSDF sdfd = scattered_pair_sdf(sys, pulse, pgrid, pulse.gamma0);
  SpectrumResult spd = output_spectrum(sdfd);
  double a4 = std::pow(pulse_grid_scale(pulse, pgrid), 4);
  rep.check("output spectrum integrates to the photon number",
            std::abs(a4 * spd.int_s_out - 2.0), 3e-2);

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  char tail[120];
  std::snprintf(tail, sizeof tail, "validation: %d checks, %d failure%s (%.1f s)\n", rep.count,
                rep.failures, rep.failures == 1 ? "" : "s", secs);
  os << tail;
  return rep.failures;
}

}  // namespace jcsim
