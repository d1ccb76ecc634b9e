#include "jcsim/grid.hpp"

#include <cmath>
#include <sstream>

namespace jcsim {

FrequencyGrid make_grid(double center, double span, int n) {
  if (!std::isfinite(center)) throw config_error("grid center must be finite");
  if (!(span > 0.0) || !std::isfinite(span)) throw config_error("grid span must be > 0");
  if (n < 2) throw config_error("grid n must be >= 2");
  FrequencyGrid g;
  g.center = center;
  g.span = span;
  g.omega = Eigen::ArrayXd::LinSpaced(n, center - span, center + span);
  double d = 2.0 * span / (n - 1);
  g.weight = Eigen::ArrayXd::Constant(n, d);
  g.weight[0] = 0.5 * d;
  g.weight[n - 1] = 0.5 * d;
  return g;
}

std::optional<std::string> coverage_warning(const SystemParams& p, const PulseSpec& pulse,
                                            const FrequencyGrid& grid) {
  p.validate();
  pulse.validate();
  double lo = grid.omega[0], hi = grid.omega[grid.n() - 1];
  std::ostringstream msg;
  double line = p.g + 5.0 * p.kappa;
  if (lo > -line || hi < line)
    msg << "grid [" << lo << ", " << hi << "] does not cover the polariton band [" << -line
        << ", " << line << "]; ";
  double plo = pulse.omega0 - 25.0 * pulse.gamma0;
  double phi = pulse.omega0 + 25.0 * pulse.gamma0;
  if (lo > plo || hi < phi)
    msg << "grid [" << lo << ", " << hi << "] does not cover the pulse support [" << plo << ", "
        << phi << "]; ";
  std::string s = msg.str();
  if (s.empty()) return std::nullopt;
  s.resize(s.size() - 2);  // drop trailing "; "
  return s + " -- results may be truncated";
}

}  // namespace jcsim
