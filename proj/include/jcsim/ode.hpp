#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <vector>

#include "jcsim/errors.hpp"

namespace jcsim {

using cvec = Eigen::VectorXcd;
using OdeRhs = std::function<void(double, const cvec&, cvec&)>;
using OdeObserver = std::function<void(double, const cvec&)>;

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = 0.0;    // 0 = unlimited
  double first_step = 0.0;  // 0 = choose automatically
  long max_steps = 100000000;
};

// Dormand-Prince 5(4) with FSAL and 5th-order dense output.
// Integrates y' = rhs(t, y) from t_begin to t_end; the observer fires at every
// requested output time (which must lie inside [t_begin, t_end], sorted).
// Returns the state at t_end. Throws numerical_error on step-size underflow.
cvec integrate(const OdeRhs& rhs, cvec y, double t_begin, double t_end,
               const std::vector<double>& output_times = {},
               const OdeObserver& observer = nullptr, const OdeOptions& opts = {});

}  // namespace jcsim
