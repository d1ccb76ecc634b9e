#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>

#include "jcsim/model.hpp"

namespace jcsim {

// Uniform frequency grid with trapezoidal quadrature weights.
struct FrequencyGrid {
  double center = 0.0;
  double span = 0.0;      // half-width: omega runs over [center-span, center+span]
  Eigen::ArrayXd omega;   // n nodes
  Eigen::ArrayXd weight;  // domega in the bulk, domega/2 at the two ends

  int n() const { return static_cast<int>(omega.size()); }
  double domega() const { return omega[1] - omega[0]; }
};

FrequencyGrid make_grid(double center, double span, int n);

// Advice (not an error) when the grid misses the polariton lines
// [-(g+5k), g+5k] or the pulse support [omega0 +- 25*gamma0].
std::optional<std::string> coverage_warning(const SystemParams& p, const PulseSpec& pulse,
                                            const FrequencyGrid& grid);

}  // namespace jcsim
