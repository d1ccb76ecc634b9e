#include "jcsim/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace jcsim {

namespace {

// Dormand-Prince 5(4) tableau (Hairer, Norsett & Wanner, DOPRI5).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// y1 - yhat1 (5th minus embedded 4th order)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

double error_norm(const cvec& err, const cvec& y0, const cvec& y1, double atol, double rtol) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    double e = std::abs(err[i]) / sc;
    s += e * e;
  }
  return std::sqrt(s / static_cast<double>(err.size()));
}

double initial_step(const OdeRhs& rhs, double t, const cvec& y, const cvec& f0, double t_end,
                    double atol, double rtol) {
  double d0 = error_norm(y, y, y, atol, rtol);
  double d1n = error_norm(f0, y, y, atol, rtol);
  double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
  h0 = std::min(h0, t_end - t);
  cvec y1 = y + h0 * f0;
  cvec f1(y.size());
  rhs(t + h0, y1, f1);
  double d2 = error_norm(cvec(f1 - f0), y, y, atol, rtol) / h0;
  double h1;
  double dm = std::max(d1n, d2);
  if (dm <= 1e-15)
    h1 = std::max(1e-6, h0 * 1e-3);
  else
    h1 = std::pow(0.01 / dm, 0.2);
  double hr = std::min({100.0 * h0, h1, t_end - t});
  // pathological tolerances can overflow the norms into inf/NaN; start tiny
  // and let the step controller decide
  if (!std::isfinite(hr) || hr <= 0.0) hr = 1e-6 * (t_end - t);
  return hr;
}

}  // namespace

cvec integrate(const OdeRhs& rhs, cvec y, double t_begin, double t_end,
               const std::vector<double>& output_times, const OdeObserver& observer,
               const OdeOptions& opts) {
  if (!(t_end >= t_begin)) throw config_error("integrate: t_end must be >= t_begin");
  for (size_t i = 0; i < output_times.size(); ++i) {
    if (output_times[i] < t_begin || output_times[i] > t_end)
      throw config_error("integrate: output time outside [t_begin, t_end]");
    if (i > 0 && output_times[i] < output_times[i - 1])
      throw config_error("integrate: output times must be sorted");
  }

  const Eigen::Index m = y.size();
  size_t iout = 0;
  while (observer && iout < output_times.size() && output_times[iout] <= t_begin) {
    observer(t_begin, y);
    ++iout;
  }
  if (t_end == t_begin) return y;

  cvec k1(m), k2(m), k3(m), k4(m), k5(m), k6(m), k7(m), ytmp(m), y1(m), yerr(m);
  double t = t_begin;
  rhs(t, y, k1);
  double h = opts.first_step > 0 ? opts.first_step
                                 : initial_step(rhs, t, y, k1, t_end, opts.atol, opts.rtol);
  if (opts.max_step > 0) h = std::min(h, opts.max_step);

  const double tspan = t_end - t_begin;
  bool rejected = false;
  for (long step = 0;; ++step) {
    if (step >= opts.max_steps) throw numerical_error("integrate: step count exceeded");
    if (t >= t_end) break;
    h = std::min(h, t_end - t);
    if (!std::isfinite(h) || h < 1e-14 * std::max(1.0, std::abs(t)) || h < 1e-16 * tspan) {
      std::ostringstream msg;
      msg << "integrate: step size underflow at t = " << t;
      throw numerical_error(msg.str());
    }

    ytmp = y + h * (a21 * k1);
    rhs(t + c2 * h, ytmp, k2);
    ytmp = y + h * (a31 * k1 + a32 * k2);
    rhs(t + c3 * h, ytmp, k3);
    ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs(t + c4 * h, ytmp, k4);
    ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs(t + c5 * h, ytmp, k5);
    ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    rhs(t + h, ytmp, k6);
    y1 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    rhs(t + h, y1, k7);  // FSAL
    yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = error_norm(yerr, y, y1, opts.atol, opts.rtol);
    if (err <= 1.0) {
      // dense output inside (t, t+h]
      if (observer && iout < output_times.size()) {
        double tol = 1e-12 * std::max(1.0, std::abs(t + h));
        while (iout < output_times.size() && output_times[iout] <= t + h + tol) {
          double th = std::clamp((output_times[iout] - t) / h, 0.0, 1.0);
          cvec dy = y1 - y;
          cvec r3 = h * k1 - dy;
          cvec r4 = dy - h * k7 - r3;
          cvec r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
          cvec yo = y + th * (dy + (1.0 - th) * (r3 + th * (r4 + (1.0 - th) * r5)));
          observer(output_times[iout], yo);
          ++iout;
        }
      }
      t += h;
      y.swap(y1);
      k1.swap(k7);
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
      fac = std::clamp(fac, 0.2, rejected ? 1.0 : 10.0);
      h *= fac;
      if (opts.max_step > 0) h = std::min(h, opts.max_step);
      rejected = false;
    } else {
      // inf err drives pow() to 0 and the clamp floor takes over, but NaN
      // would poison the controller
      double fac = std::isnan(err) ? 0.2 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
      h *= fac;
      rejected = true;
    }
  }
  // Any outputs that fell exactly on t_end but were missed by rounding.
  while (observer && iout < output_times.size()) {
    observer(output_times[iout], y);
    ++iout;
  }
  return y;
}

}  // namespace jcsim
