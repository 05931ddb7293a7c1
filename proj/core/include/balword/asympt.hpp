#pragma once

#include <gmpxx.h>

#include "balword/rational.hpp"

namespace balword::asympt {

// exp of the binary entropy at alpha: (1/alpha)^alpha (1/(1-alpha))^(1-alpha).
double tilde_e(double alpha);
double tilde_e(const Rational& alpha);

struct Direction {
  long long r = 0;
  long long s = 0;
};

struct CriticalPoint {
  double x = 0;
  double y = 0;
  double denominator_residual = 0;  // |1 - x - y|, should be ~0
};

// Critical point of the denominator 1 - x - y in direction (r, s):
// the smooth point with x dD/dx : y dD/dy = r : s, which is
// x = r/(r+s), y = s/(r+s).
CriticalPoint critical_point(Direction d);

struct AsymptoticEstimate {
  double f = 0;          // first-order coefficient estimate (inf if overflowed)
  double log_f = 0;      // log of the estimate, safe for huge directions
  mpz_class exact;       // the true coefficient C(r+s, r)
  double rel_error = 0;  // |f / exact - 1|, computed in logs
  double q_value = 0;    // the curvature form x y at the critical point
};

// First-order saddle-point estimate of the Taylor coefficient a_{r,s} of
// 1/(1 - x - y):
//   f = x^{-r} y^{-s} / sqrt(2 pi s x)
// at the critical point, against the exact coefficient. The curvature
// form for this denominator reduces to x y (positive on the relevant
// branch, asserted).
AsymptoticEstimate pemantle_estimate(Direction d);

// C(r+s, r), the exact coefficient.
mpz_class binomial_exact(long long r, long long s);

}  // namespace balword::asympt
