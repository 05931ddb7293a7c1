#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <balword/asympt.hpp>

#include <cmath>
#include <vector>

using namespace balword;

TEST_CASE("entropy rate closed forms") {
  CHECK(asympt::tilde_e(0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(asympt::tilde_e(Rational(1, 2)) == doctest::Approx(2.0).epsilon(1e-14));
  // (1/3)^(-1/3) (2/3)^(-2/3) = 3 / 2^(2/3).
  CHECK(asympt::tilde_e(Rational(1, 3)) ==
        doctest::Approx(3.0 / std::cbrt(4.0)).epsilon(1e-14));
  // Symmetric in alpha <-> 1 - alpha.
  CHECK(asympt::tilde_e(Rational(2, 5)) ==
        doctest::Approx(asympt::tilde_e(Rational(3, 5))).epsilon(1e-14));
}

TEST_CASE("binomials against a pascal-rule oracle") {
  const long long N = 60;
  std::vector<std::vector<mpz_class>> pas(static_cast<size_t>(N + 1));
  for (long long i = 0; i <= N; ++i) {
    pas[static_cast<size_t>(i)].assign(static_cast<size_t>(i + 1), 1);
    for (long long j = 1; j < i; ++j)
      pas[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pas[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          pas[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  }
  for (long long n = 0; n <= N; n += 3)
    for (long long r = 0; r <= n; ++r)
      CHECK(asympt::binomial_exact(r, n - r) ==
            pas[static_cast<size_t>(n)][static_cast<size_t>(r)]);
  CHECK(asympt::binomial_exact(10, 10).get_str() == "184756");
}

TEST_CASE("critical point sits on the curve, proportional to the direction") {
  auto cp = asympt::critical_point({3, 7});
  CHECK(cp.x == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(cp.y == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(cp.denominator_residual < 1e-15);
}

TEST_CASE("estimate against the exact coefficient, diagonal") {
  auto e10 = asympt::pemantle_estimate({10, 10});
  CHECK(e10.exact == asympt::binomial_exact(10, 10));
  CHECK(e10.q_value > 0);
  CHECK(e10.rel_error < 0.02);
  // First-order saddle point: error falls like 1/(r+s).
  auto e50 = asympt::pemantle_estimate({50, 50});
  auto e200 = asympt::pemantle_estimate({200, 200});
  CHECK(e50.rel_error < e10.rel_error);
  CHECK(e200.rel_error < e50.rel_error);
  CHECK(e200.rel_error > 0);
  // f and log_f agree where f is representable.
  CHECK(std::log(e10.f) == doctest::Approx(e10.log_f).epsilon(1e-12));
}

TEST_CASE("estimate off the diagonal and at huge sizes") {
  auto e = asympt::pemantle_estimate({30, 90});
  CHECK(e.exact == asympt::binomial_exact(30, 90));
  CHECK(e.rel_error < 0.01);
  // Far beyond double range: log branch still works.
  auto big = asympt::pemantle_estimate({800, 1600});
  CHECK(std::isinf(big.f));
  CHECK(big.rel_error < 1e-3);
  CHECK(big.log_f > 1000.0);
}

TEST_CASE("diagonal estimate tracks the central binomial formula") {
  // At r = s = m the estimate is 4^m / sqrt(pi m), the standard central
  // binomial asymptotic.
  const long long m = 40;
  auto e = asympt::pemantle_estimate({m, m});
  double want = 2.0 * static_cast<double>(m) * std::log(2.0) -
                0.5 * std::log(M_PI * static_cast<double>(m));
  CHECK(e.log_f == doctest::Approx(want).epsilon(1e-12));
}
