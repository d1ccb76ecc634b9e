#pragma once

#include <vector>

#include "jcsim/ode.hpp"
#include "jcsim/states.hpp"

namespace jcsim {

// Discrete renormalization 1/sqrt(sum_k |xi_k|^2 w_k): initial packets carry it
// so the sampled state is exactly unit-norm on the grid, and the classical
// drive is scaled by the same factor per excitation so that the grid solution
// equals the continuum one times scale^(sector).
double pulse_grid_scale(const PulseSpec& pulse, const FrequencyGrid& grid);

struct InitialStates {
  OneExcState one;
  TwoExcState two;
  double scale = 1.0;
};
InitialStates initial_states(const PulseSpec& pulse, const FrequencyGrid& grid);

// Equations of motion; dsdt may alias nothing. drive_scale multiplies the
// classical pulse amplitude (1.0 = continuum normalization).
void rhs_one(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid, double t,
             const OneExcState& s, OneExcState& dsdt, double drive_scale = 1.0);
void rhs_two(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid, double t,
             const OneExcState& one, const TwoExcState& s, TwoExcState& dsdt,
             double drive_scale = 1.0);

struct EvolveOptions {
  double t_end = 60.0;
  double output_dt = 0.25;                 // used when output_times is empty
  std::vector<double> output_times;        // must lie in [0, t_end]
  std::vector<double> snapshot_times;      // full-state captures
  double rtol = 1e-8;
  double atol = 1e-10;
  bool warn = true;                        // coverage advice on stderr
};

struct Snapshot {
  double t = 0.0;
  OneExcState one;
  TwoExcState two;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Observables> obs;   // two-excitation sector
  std::vector<double> norm1;      // one-excitation sector norm
  std::vector<Snapshot> snapshots;
  double scale = 1.0;             // pulse_grid_scale actually used
};

// Co-integrates both excitation sectors from t = 0 with the renormalized
// packet; integration restarts at pulse.t0 where the drive switches on.
Trajectory evolve(const SystemParams& p, const PulseSpec& pulse, const FrequencyGrid& grid,
                  const EvolveOptions& opts = {});

}  // namespace jcsim
