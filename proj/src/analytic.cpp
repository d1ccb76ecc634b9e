#include "jcsim/analytic.hpp"

#include <cmath>

#include "jcsim/expsum.hpp"
#include "jcsim/parallel.hpp"

namespace jcsim {

namespace {

// All closed forms run in shifted time s = t - t0; the states are trivial
// (free input evolution) before the pulse front arrives.
struct Cascade {
  SystemParams p;
  PulseSpec pulse;
  double eps;   // pole-coincidence switch for the secular branch
  double f, g;
  cplx w0c;     // complex drive rate omega0 - i*gamma0/2
  ExpSum xi;    // classical drive Xi(s)
  ExpSum2 a;    // (A_g, A_e)
  ExpSum2 z;    // (Z_g, Z_e)

  Cascade(const SystemParams& p_, const PulseSpec& pu) : p(p_), pulse(pu) {
    p.validate();
    pu.validate();
    eps = 1e-9 * p.kappa;
    f = p.f();
    g = p.g;
    w0c = cplx(pulse.omega0, -0.5 * pulse.gamma0);
    cplx amp = cplx(0.0, -1.0) * std::sqrt(2.0 * M_PI * pulse.gamma0) *
               std::exp(cplx(0.0, -pulse.omega0 * pulse.t0));
    xi.add(amp, w0c, 0);

    Block2 m1 = Block2::make(p.omega_c(), g, p.omega_a());
    ExpSum2 asrc;
    for (const auto& tm : xi.terms) asrc.add(f * tm.c * Eigen::Vector2cd(1.0, 0.0), tm.lam, tm.p);
    a = solve_block(m1, asrc, Eigen::Vector2cd::Zero(), eps);

    const double r2 = std::sqrt(2.0);
    Block2 m2 = Block2::make(2.0 * p.omega_c(), r2 * g, p.omega_c() + p.omega_a());
    ExpSum2 zsrc;
    for (const auto& tm : mul(xi, a.component(0)).terms)
      zsrc.add(2.0 * f * tm.c * Eigen::Vector2cd(1.0, 0.0), tm.lam, tm.p);
    for (const auto& tm : mul(xi, a.component(1)).terms)
      zsrc.add(r2 * f * tm.c * Eigen::Vector2cd(0.0, 1.0), tm.lam, tm.p);
    z = solve_block(m2, zsrc, Eigen::Vector2cd::Zero(), eps);
  }

  // Input photon amplitude at the pulse front, xi(omega) e^{-i omega t0}.
  cplx b_front(double omega) const {
    return pulse_sdf(pulse, omega) * std::exp(cplx(0.0, -omega * pulse.t0));
  }

  ExpSum b_terms(double omega) const {
    ExpSum src;
    for (const auto& tm : a.component(0).terms) src.add(f * tm.c, tm.lam, tm.p);
    return solve_scalar(omega, src, b_front(omega), eps);
  }

  ExpSum2 x_terms(double omega, const ExpSum& b) const {
    const double r2 = std::sqrt(2.0);
    Block2 mx = Block2::make(omega + p.omega_c(), g, omega + p.omega_a());
    ExpSum2 src;
    for (const auto& tm : mul(xi, b).terms)
      src.add(r2 * f * tm.c * Eigen::Vector2cd(1.0, 0.0), tm.lam, tm.p);
    for (const auto& tm : z.component(0).terms)
      src.add(r2 * f * tm.c * Eigen::Vector2cd(1.0, 0.0), tm.lam, tm.p);
    for (const auto& tm : z.component(1).terms)
      src.add(f * tm.c * Eigen::Vector2cd(0.0, 1.0), tm.lam, tm.p);
    return solve_block(mx, src, Eigen::Vector2cd::Zero(), eps);
  }

  ExpSum phi_terms(double omega_j, double omega_k, const ExpSum& xg_j,
                   const ExpSum& xg_k) const {
    const double c = f / std::sqrt(2.0);
    ExpSum src;
    src.terms.reserve(xg_j.terms.size() + xg_k.terms.size());
    for (const auto& tm : xg_j.terms) src.add(c * tm.c, tm.lam, tm.p);
    for (const auto& tm : xg_k.terms) src.add(c * tm.c, tm.lam, tm.p);
    return solve_scalar(omega_j + omega_k, src, b_front(omega_j) * b_front(omega_k), eps);
  }
};

}  // namespace

OneExcState one_exc_closed_form(const SystemParams& p, const PulseSpec& pulse,
                                const FrequencyGrid& grid, double t) {
  const int n = grid.n();
  OneExcState out = OneExcState::zero(n);
  if (t < pulse.t0) {
    p.validate();
    for (int k = 0; k < n; ++k)
      out.b[k] = pulse_sdf(pulse, grid.omega[k]) * std::exp(cplx(0.0, -grid.omega[k] * t));
    return out;
  }
  Cascade cas(p, pulse);
  double s = t - pulse.t0;
  Eigen::Vector2cd av = cas.a.eval(s);
  out.a_g = av[0];
  out.a_e = av[1];
  for (int k = 0; k < n; ++k) out.b[k] = cas.b_terms(grid.omega[k]).eval(s);
  return out;
}

cplx scattered_single_sdf(const SystemParams& p, const PulseSpec& pulse, double omega) {
  return std::exp(cplx(0.0, single_photon_phase(p, omega))) * pulse_sdf(pulse, omega);
}

ScatteredSDF scattered_pair_sdf(const SystemParams& p, const PulseSpec& pulse,
                                const FrequencyGrid& grid, double gamma_reg) {
  p.validate();
  pulse.validate();
  if (!(gamma_reg > 0.0) || !std::isfinite(gamma_reg))
    throw config_error("gamma_reg must be > 0");
  const int n = grid.n();
  ScatteredSDF out;
  out.grid = grid;
  out.gamma_reg = gamma_reg;
  out.elastic.resize(n, n);
  out.inelastic.setZero(n, n);

  Eigen::VectorXcd scat(n);
  for (int k = 0; k < n; ++k) scat[k] = scattered_single_sdf(p, pulse, grid.omega[k]);
  out.elastic = scat * scat.transpose();

  if (p.g > 0.0) {
    auto [e1p, e1m] = single_photon_resonances(p);
    auto [e2p, e2m] = two_photon_resonances(p);
    const double pref = 16.0 * M_PI * M_PI * std::pow(p.f(), 4) * std::pow(p.g, 4);
    const cplx reg(2.0 * pulse.omega0, -gamma_reg);
    parallel_for(n, [&](long lo, long hi) {
      for (long j = lo; j < hi; ++j) {
        double wj = grid.omega[j];
        cplx dj = (wj - e1p) * (wj - e1m);
        for (int k = 0; k <= j; ++k) {
          double wk = grid.omega[k];
          cplx e = wj + wk;
          cplx bracket = 0.5 + (e - e1p - e1m) / (e - reg);
          cplx den = dj * (wk - e1p) * (wk - e1m) * (e - e2p) * (e - e2m);
          cplx val =
              pref * bracket / den * pulse_sdf(pulse, e - e1p) * pulse_sdf(pulse, e - e1m);
          out.inelastic(j, k) = val;
          out.inelastic(k, j) = val;
        }
      }
    });
  }
  out.total = out.elastic + out.inelastic;
  return out;
}

Eigen::MatrixXcd two_exc_transient(const SystemParams& p, const PulseSpec& pulse,
                                   const FrequencyGrid& grid, double t) {
  const int n = grid.n();
  Eigen::MatrixXcd phi(n, n);
  if (t < pulse.t0) {
    p.validate();
    Eigen::VectorXcd v(n);
    for (int k = 0; k < n; ++k)
      v[k] = pulse_sdf(pulse, grid.omega[k]) * std::exp(cplx(0.0, -grid.omega[k] * t));
    phi = v * v.transpose();
    return phi;
  }
  Cascade cas(p, pulse);
  double s = t - pulse.t0;
  std::vector<ExpSum> xg(n);
  parallel_for(n, [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k)
      xg[k] = cas.x_terms(grid.omega[k], cas.b_terms(grid.omega[k])).component(0);
  });
  parallel_for(n, [&](long lo, long hi) {
    for (long j = lo; j < hi; ++j)
      for (int k = 0; k <= j; ++k) {
        cplx v = cas.phi_terms(grid.omega[j], grid.omega[k], xg[j], xg[k]).eval(s);
        phi(j, k) = v;
        phi(k, j) = v;
      }
  });
  return phi;
}

}  // namespace jcsim
