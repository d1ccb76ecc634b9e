#include "jcsim/expsum.hpp"

#include <cmath>

#include "jcsim/errors.hpp"

namespace jcsim {

namespace {

double powi(double t, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= t;
  return r;
}

// Particular solution of i u' = e0 u + c t^p exp(-i lam t), appended to out.
// Returns the value of the particular solution at t = 0.
template <class Coef>
Coef particular(std::vector<std::pair<Coef, std::pair<cplx, int>>>& out, cplx e0, const Coef& c,
                cplx lam, int p, double eps, const Coef& zero) {
  if (std::abs(lam - e0) < eps) {
    // Secular branch: u = -i c t^(p+1)/(p+1) exp(-i lam t).
    out.push_back({cplx(0.0, -1.0) / double(p + 1) * c, {lam, p + 1}});
    return zero;
  }
  // u = sum_j u_j t^j exp(-i lam t) with a downward recurrence from j = p.
  std::vector<Coef> u(p + 1, zero);
  u[p] = -1.0 / (e0 - lam) * c;
  for (int j = p; j > 0; --j) u[j - 1] = cplx(0.0, 1.0) * double(j) / (e0 - lam) * u[j];
  for (int j = 0; j <= p; ++j) out.push_back({u[j], {lam, j}});
  return u[0];
}

}  // namespace

ExpSum& ExpSum::add(cplx c, cplx lam, int p) {
  terms.push_back({c, lam, p});
  return *this;
}

cplx ExpSum::eval(double t) const {
  cplx s(0.0, 0.0);
  for (const auto& tm : terms)
    s += tm.c * powi(t, tm.p) * std::exp(cplx(0.0, -1.0) * tm.lam * t);
  return s;
}

ExpSum mul(const ExpSum& a, const ExpSum& b) {
  ExpSum out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) out.add(ta.c * tb.c, ta.lam + tb.lam, ta.p + tb.p);
  return out;
}

ExpSum2& ExpSum2::add(const Eigen::Vector2cd& c, cplx lam, int p) {
  terms.push_back({c, lam, p});
  return *this;
}

Eigen::Vector2cd ExpSum2::eval(double t) const {
  Eigen::Vector2cd s = Eigen::Vector2cd::Zero();
  for (const auto& tm : terms)
    s += tm.c * (powi(t, tm.p) * std::exp(cplx(0.0, -1.0) * tm.lam * t));
  return s;
}

ExpSum ExpSum2::component(int i) const {
  ExpSum out;
  out.terms.reserve(terms.size());
  for (const auto& tm : terms)
    if (tm.c[i] != cplx(0.0, 0.0)) out.add(tm.c[i], tm.lam, tm.p);
  return out;
}

Block2 Block2::make(cplx m00, cplx m01, cplx m11) {
  cplx mean = 0.5 * (m00 + m11);
  cplx r = std::sqrt((m00 - m11) * (m00 - m11) + 4.0 * m01 * m01);
  cplx a = mean + 0.5 * r, b = mean - 0.5 * r;
  if (a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag())) std::swap(a, b);
  double scale = std::max({std::abs(m00), std::abs(m11), std::abs(m01), 1.0});
  if (std::abs(a - b) < 1e-12 * scale)
    throw numerical_error("degenerate 2x2 block (exceptional point): no spectral closed form");
  Eigen::Matrix2cd m;
  m << m00, m01, m01, m11;
  Block2 out;
  out.ep = a;
  out.em = b;
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  out.pp = (m - b * id) / (a - b);
  out.pm = (m - a * id) / (b - a);
  return out;
}

ExpSum solve_scalar(cplx e0, const ExpSum& src, cplx y0, double eps) {
  std::vector<std::pair<cplx, std::pair<cplx, int>>> acc;
  cplx at0(0.0, 0.0);
  for (const auto& s : src.terms)
    at0 += particular<cplx>(acc, e0, s.c, s.lam, s.p, eps, cplx(0.0, 0.0));
  ExpSum out;
  out.terms.reserve(acc.size() + 1);
  for (const auto& [c, lp] : acc) out.add(c, lp.first, lp.second);
  out.add(y0 - at0, e0, 0);
  return out;
}

ExpSum2 solve_block(const Block2& blk, const ExpSum2& src, const Eigen::Vector2cd& y0,
                    double eps) {
  std::vector<std::pair<Eigen::Vector2cd, std::pair<cplx, int>>> acc;
  Eigen::Vector2cd at0 = Eigen::Vector2cd::Zero();
  const Eigen::Vector2cd zero = Eigen::Vector2cd::Zero();
  for (const auto& s : src.terms) {
    Eigen::Vector2cd cp = blk.pp * s.c;
    Eigen::Vector2cd cm = blk.pm * s.c;
    at0 += particular<Eigen::Vector2cd>(acc, blk.ep, cp, s.lam, s.p, eps, zero);
    at0 += particular<Eigen::Vector2cd>(acc, blk.em, cm, s.lam, s.p, eps, zero);
  }
  Eigen::Vector2cd h = y0 - at0;
  ExpSum2 out;
  out.terms.reserve(acc.size() + 2);
  for (const auto& [c, lp] : acc) out.add(c, lp.first, lp.second);
  out.add(blk.pp * h, blk.ep, 0);
  out.add(blk.pm * h, blk.em, 0);
  return out;
}

}  // namespace jcsim
