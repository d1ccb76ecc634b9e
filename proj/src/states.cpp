#include "jcsim/states.hpp"

namespace jcsim {

OneExcState OneExcState::zero(int n) {
  OneExcState s;
  s.b = Eigen::VectorXcd::Zero(n);
  return s;
}

TwoExcState TwoExcState::zero(int n) {
  TwoExcState s;
  s.phi = Eigen::MatrixXcd::Zero(n, n);
  s.x_g = Eigen::VectorXcd::Zero(n);
  s.x_e = Eigen::VectorXcd::Zero(n);
  return s;
}

double one_exc_norm(const OneExcState& s, const FrequencyGrid& grid) {
  double bsum = (s.b.array().abs2() * grid.weight).sum();
  return std::norm(s.a_g) + std::norm(s.a_e) + bsum;
}

Observables observables(const TwoExcState& s, const FrequencyGrid& grid) {
  const Eigen::ArrayXd& w = grid.weight;
  Observables o;
  double xg = (s.x_g.array().abs2() * w).sum();
  double xe = (s.x_e.array().abs2() * w).sum();
  double zg = std::norm(s.z_g), ze = std::norm(s.z_e);
  o.n_c = xg + ze + 2.0 * zg;
  o.p_a = xe + ze;
  o.p1 = xg + xe;
  o.p2 = zg + ze;
  Eigen::VectorXd wv = w.matrix();
  double phi2 = wv.dot(s.phi.cwiseAbs2() * wv);
  o.norm2 = phi2 + o.p1 + o.p2;
  return o;
}

}  // namespace jcsim
