#include "balword/asympt.hpp"

#include <cmath>
#include <stdexcept>

namespace balword::asympt {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_direction(Direction d) {
  if (d.r < 1 || d.s < 1)
    throw std::invalid_argument("direction components must be positive");
}

// log of an mpz via mantissa and binary exponent, exact enough for
// relative-error work at any size.
double log_mpz(const mpz_class& z) {
  signed long e = 0;
  const double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

double tilde_e(double alpha) {
  if (!(alpha > 0 && alpha < 1))
    throw std::invalid_argument("alpha must lie in (0, 1)");
  return std::exp(-alpha * std::log(alpha) -
                  (1.0 - alpha) * std::log(1.0 - alpha));
}

double tilde_e(const Rational& alpha) {
  if (!alpha.in_open_unit_interval())
    throw std::invalid_argument("alpha must lie in (0, 1)");
  return tilde_e(static_cast<double>(alpha.num) /
                 static_cast<double>(alpha.den));
}

CriticalPoint critical_point(Direction d) {
  check_direction(d);
  CriticalPoint cp;
  const double total = static_cast<double>(d.r) + static_cast<double>(d.s);
  cp.x = static_cast<double>(d.r) / total;
  cp.y = static_cast<double>(d.s) / total;
  cp.denominator_residual = std::fabs(1.0 - cp.x - cp.y);
  return cp;
}

mpz_class binomial_exact(long long r, long long s) {
  if (r < 0 || s < 0) throw std::invalid_argument("need r, s >= 0");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r + s),
               static_cast<unsigned long>(r));
  return b;
}

AsymptoticEstimate pemantle_estimate(Direction d) {
  const CriticalPoint cp = critical_point(d);
  AsymptoticEstimate est;
  est.q_value = cp.x * cp.y;
  if (!(est.q_value > 0))
    throw std::logic_error("curvature form must be positive at the critical point");
  est.log_f = -static_cast<double>(d.r) * std::log(cp.x) -
              static_cast<double>(d.s) * std::log(cp.y) -
              0.5 * std::log(2.0 * kPi * static_cast<double>(d.s) * cp.x);
  est.f = std::exp(est.log_f);
  est.exact = binomial_exact(d.r, d.s);
  est.rel_error = std::fabs(std::exp(est.log_f - log_mpz(est.exact)) - 1.0);
  return est;
}

}  // namespace balword::asympt
