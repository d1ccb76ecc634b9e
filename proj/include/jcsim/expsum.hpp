#pragma once

#include <Eigen/Core>
#include <vector>

#include "jcsim/model.hpp"

namespace jcsim {

// Finite sums of c * t^p * exp(-i*lam*t). Closed under the operations needed
// by the driven linear hierarchy: products, and solving i y' = e0 y + src(t).
struct ExpTerm {
  cplx c;
  cplx lam;
  int p;
};

struct ExpSum {
  std::vector<ExpTerm> terms;
  ExpSum& add(cplx c, cplx lam, int p);
  cplx eval(double t) const;
};

ExpSum mul(const ExpSum& a, const ExpSum& b);

// Two-component variant for the coupled 2x2 blocks of the hierarchy.
struct ExpTerm2 {
  Eigen::Vector2cd c;
  cplx lam;
  int p;
};

struct ExpSum2 {
  std::vector<ExpTerm2> terms;
  ExpSum2& add(const Eigen::Vector2cd& c, cplx lam, int p);
  Eigen::Vector2cd eval(double t) const;
  ExpSum component(int i) const;
};

// Complex-symmetric 2x2 block [[m00, m01], [m01, m11]] with its spectral
// decomposition. "+" labels the eigenvalue with the larger real part
// (larger imaginary part on ties). Degenerate blocks (exceptional points)
// have no spectral closed form and raise numerical_error.
struct Block2 {
  cplx ep, em;
  Eigen::Matrix2cd pp, pm;  // projectors onto the two eigenspaces
  static Block2 make(cplx m00, cplx m01, cplx m11);
};

// Exact solution of i y' = e0 y + src(t), y(0) = y0, in the ExpSum algebra.
// Drive poles closer than eps to the eigenvalue take the secular branch
// (resonantly growing t-power) instead of the divergent pole form.
ExpSum solve_scalar(cplx e0, const ExpSum& src, cplx y0, double eps);
ExpSum2 solve_block(const Block2& blk, const ExpSum2& src, const Eigen::Vector2cd& y0,
                    double eps);

}  // namespace jcsim
