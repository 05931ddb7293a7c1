#include "balword/poly.hpp"

#include <gmpxx.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace balword::poly {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx ipow(cplx base, int e) {
  cplx acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

double rpow(double base, int e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Magnitude of the two summands of P, the natural residual scale.
double eval_scale(const PolyInstance& f, cplx x) {
  return std::pow(std::abs(x + 1.0), f.n) +
         std::abs(f.lambda) * std::pow(std::abs(x), f.p) + 1e-300;
}

// Newton against the unexpanded form, keeping the best iterate seen.
cplx newton_polish(const PolyInstance& f, cplx x0, int iters) {
  cplx best = x0;
  double best_resid = std::abs(eval(f, x0)) / eval_scale(f, x0);
  cplx z = x0;
  for (int it = 0; it < iters; ++it) {
    const cplx dv = deriv(f, z);
    if (dv == 0.0) break;
    const cplx step = eval(f, z) / dv;
    z -= step;
    const double resid = std::abs(eval(f, z)) / eval_scale(f, z);
    if (resid < best_resid) {
      best_resid = resid;
      best = z;
    }
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return best;
}

double min_pairwise_distance(const std::vector<cplx>& xs) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      m = std::min(m, std::abs(xs[i] - xs[j]));
  return m;
}

long long count_real_roots(int n, int p, double lambda) {
  const RootSet rs = roots(PolyInstance(n, p, lambda));
  long long c = 0;
  for (cplx x : rs.roots)
    if (std::fabs(x.imag()) <= 1e-7 * (1.0 + std::abs(x))) ++c;
  return c;
}

double real_P(int n, int p, double x, double lambda) {
  return rpow(x + 1.0, n) - lambda * rpow(x, p);
}

double real_Px(int n, int p, double x, double lambda) {
  return n * rpow(x + 1.0, n - 1) - lambda * p * rpow(x, p - 1);
}

}  // namespace

PolyInstance::PolyInstance(int n_, int p_, cplx lambda_)
    : n(n_), p(p_), lambda(lambda_) {
  if (!(0 < p && p < n) || n > 64)
    throw std::invalid_argument("need 0 < p < n <= 64");
}

cplx eval(const PolyInstance& f, cplx x) {
  return ipow(x + 1.0, f.n) - f.lambda * ipow(x, f.p);
}

cplx deriv(const PolyInstance& f, cplx x) {
  return static_cast<double>(f.n) * ipow(x + 1.0, f.n - 1) -
         f.lambda * static_cast<double>(f.p) * ipow(x, f.p - 1);
}

RootSet roots(const PolyInstance& f, double tol) {
  if (f.lambda == 0.0)
    throw std::invalid_argument("lambda must be nonzero");
  const int n = f.n;

  // Monic expanded coefficients: binomials, with lambda folded into the
  // x^p slot. Exact binomials first; the fold and the companion solve are
  // in doubles, so everything gets a Newton pass afterwards.
  std::vector<cplx> coef(static_cast<size_t>(n));
  mpz_class b;
  for (int k = 0; k < n; ++k) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    coef[static_cast<size_t>(k)] = b.get_d();
  }
  coef[static_cast<size_t>(f.p)] -= f.lambda;

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coef[static_cast<size_t>(i)];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("companion eigensolve failed");

  RootSet rs;
  rs.roots.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    rs.roots[static_cast<size_t>(k)] = newton_polish(f, es.eigenvalues()(k), 60);

  std::sort(rs.roots.begin(), rs.roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  rs.residuals.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const cplx x = rs.roots[static_cast<size_t>(k)];
    rs.residuals[static_cast<size_t>(k)] =
        std::abs(eval(f, x)) / eval_scale(f, x);
    rs.max_residual = std::max(rs.max_residual, rs.residuals[static_cast<size_t>(k)]);
  }
  rs.min_separation = min_pairwise_distance(rs.roots);
  rs.clustered = rs.min_separation < 1e-6;
  if (rs.max_residual > tol)
    throw std::runtime_error("root residuals exceed the requested tolerance");
  return rs;
}

CriticalData critical_data(int n, int p) {
  PolyInstance probe(n, p, 1.0);  // validates the degree bounds
  const int q = n - p;
  mpz_class nn, pp, qq;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n));
  mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(p));
  mpz_ui_pow_ui(qq.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(q));
  mpq_class ratio{nn, pp * qq};
  ratio.canonicalize();

  CriticalData cd;
  cd.lambda_crit = ratio.get_d();
  cd.double_root = static_cast<double>(p) / static_cast<double>(q);
  const double x = cd.double_root;
  const double lam = cd.lambda_crit;
  const double scale = rpow(x + 1.0, n) + lam * rpow(x, p);
  const double dscale = n * rpow(x + 1.0, n - 1) + lam * p * rpow(x, p - 1);
  cd.residual_p = std::fabs(real_P(n, p, x, lam)) / scale;
  cd.residual_dp = std::fabs(real_Px(n, p, x, lam)) / dscale;
  return cd;
}

CriticalSearch detect_critical(int n, int p) {
  CriticalSearch out;

  // Bracket the jump in the real-root count by doubling, then bisect.
  const long long base_count = count_real_roots(n, p, 1e-3);
  double lo = 1e-3;
  double hi = lo;
  bool jumped = false;
  while (hi < 1e30) {
    hi *= 2;
    if (count_real_roots(n, p, hi) != base_count) {
      jumped = true;
      break;
    }
    lo = hi;
  }
  if (!jumped) return out;
  while (hi - lo > 1e-3 * hi) {
    const double mid = lo + 0.5 * (hi - lo);
    if (count_real_roots(n, p, mid) != base_count)
      hi = mid;
    else
      lo = mid;
  }

  // Seed: the two nearest real roots just past the collision.
  const RootSet rs = roots(PolyInstance(n, p, hi));
  std::vector<double> reals;
  for (cplx x : rs.roots)
    if (std::fabs(x.imag()) <= 1e-7 * (1.0 + std::abs(x)))
      reals.push_back(x.real());
  std::sort(reals.begin(), reals.end());
  if (reals.size() < 2) return out;
  double x0 = reals[0];
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < reals.size(); ++i)
    if (reals[i + 1] - reals[i] < gap) {
      gap = reals[i + 1] - reals[i];
      x0 = 0.5 * (reals[i] + reals[i + 1]);
    }
  double lam = hi;

  // Newton on (P, dP/dx) = 0 in the plane (x, lambda).
  for (int it = 1; it <= 60; ++it) {
    const double f1 = real_P(n, p, x0, lam);
    const double f2 = real_Px(n, p, x0, lam);
    const double j11 = real_Px(n, p, x0, lam);
    const double j12 = -rpow(x0, p);
    const double j21 = n * (n - 1) * rpow(x0 + 1.0, n - 2) -
                       (p >= 2 ? lam * p * (p - 1) * rpow(x0, p - 2) : 0.0);
    const double j22 = -(p >= 1 ? p * rpow(x0, p - 1) : 0.0);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0) break;
    const double dx = (f1 * j22 - f2 * j12) / det;
    const double dl = (j11 * f2 - j21 * f1) / det;
    x0 -= dx;
    lam -= dl;
    out.newton_iterations = it;
    if (std::fabs(dx) <= 1e-14 * (1.0 + std::fabs(x0)) &&
        std::fabs(dl) <= 1e-14 * (1.0 + std::fabs(lam))) {
      out.converged = true;
      break;
    }
  }
  out.x = x0;
  out.lambda = lam;
  return out;
}

SmallLambdaRoots small_lambda_roots(int n, int p, double eps) {
  PolyInstance probe(n, p, 1.0);
  if (!(eps > 0 && eps <= 0.2))
    throw std::invalid_argument("eps must lie in (0, 0.2]");
  const double lambda = rpow(eps, n);
  const double s = (p % 2 == 1) ? 0.5 : 0.0;

  SmallLambdaRoots out;
  out.eps = eps;
  out.gamma.resize(static_cast<size_t>(n));
  out.approx.resize(static_cast<size_t>(n));
  out.matched.resize(static_cast<size_t>(n));
  const PolyInstance f(n, p, lambda);
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * (j + s) / n;
    const cplx g = eps * cplx(std::cos(theta), std::sin(theta));
    out.gamma[static_cast<size_t>(j)] = g;
    out.approx[static_cast<size_t>(j)] = g - 1.0;
    // Each first-order position sits well inside its own branch's basin,
    // so plain Newton lands on the true branch root. This route never
    // expands the polynomial, so it survives lambda far below coefficient
    // rounding.
    const cplx x = newton_polish(f, g - 1.0, 80);
    out.matched[static_cast<size_t>(j)] = x;
    out.max_match_error =
        std::max(out.max_match_error, std::abs(x - (g - 1.0)));
  }
  const double spacing = 2.0 * kPi * eps / n;
  if (min_pairwise_distance(out.matched) < 0.5 * spacing)
    throw std::runtime_error("branch refinement collapsed two labels");
  for (cplx x : out.matched)
    if (std::abs(eval(f, x)) / eval_scale(f, x) > 1e-10)
      throw std::runtime_error("branch refinement failed to converge");
  return out;
}

LabeledRoots initial_labels(int n, int p, double eps) {
  const SmallLambdaRoots s = small_lambda_roots(n, p, eps);
  LabeledRoots lr;
  lr.n = n;
  lr.p = p;
  lr.lambda = rpow(eps, n);
  lr.x = s.matched;
  return lr;
}

void continue_along(LabeledRoots& lr, const std::function<cplx(double)>& path,
                    const TrackOptions& opts) {
  if (lr.x.size() != static_cast<size_t>(lr.n))
    throw std::invalid_argument("labeled configuration is incomplete");
  cplx lam = path(0.0);
  if (std::abs(lam - lr.lambda) > 1e-9 * (1.0 + std::abs(lr.lambda)))
    throw std::invalid_argument("path must start at the current parameter");

  const double dt_max = 1.0 / opts.initial_steps;
  const double dt_floor = dt_max / static_cast<double>(1LL << 34);
  double t = 0;
  double dt = dt_max;
  long long accepted = 0;
  const size_t n = lr.x.size();
  std::vector<cplx> next(n);

  while (t < 1.0) {
    dt = std::min(dt, 1.0 - t);
    const cplx lam_next = path(t + dt);
    const double limit = opts.step_fraction * min_pairwise_distance(lr.x);
    const PolyInstance f_cur(lr.n, lr.p, lam);
    const PolyInstance f_next(lr.n, lr.p, lam_next);

    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j) {
      cplx der = 0.0;
      try {
        der = dx_dlambda(f_cur, lr.x[j]);
      } catch (const std::domain_error&) {
        // At a near-singular point the corrector alone must carry the step.
      }
      const cplx pred = lr.x[j] + der * (lam_next - lam);
      if (std::abs(pred - lr.x[j]) > limit) {
        ok = false;
        break;
      }
      cplx z = pred;
      bool converged = false;
      for (int it = 0; it < 30; ++it) {
        const cplx dv = deriv(f_next, z);
        if (dv == 0.0) break;
        const cplx step = eval(f_next, z) / dv;
        z -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) {
          converged = true;
          break;
        }
      }
      if (!converged || std::abs(z - lr.x[j]) > limit) {
        ok = false;
        break;
      }
      next[j] = z;
    }

    if (ok) {
      lr.x = next;
      lam = lam_next;
      t += dt;
      if (++accepted > opts.max_steps)
        throw std::runtime_error("root tracking exceeded its step budget");
      dt = std::min(dt * 1.4, dt_max);
    } else {
      dt *= 0.5;
      if (dt < dt_floor)
        throw std::runtime_error("root tracking step underflow");
    }
  }
  lr.lambda = lam;
}

LabeledRoots labeled_roots(int n, int p, double lambda, double eps) {
  if (!(lambda > 0))
    throw std::invalid_argument("lambda must be positive real");
  LabeledRoots lr = initial_labels(n, p, eps);
  const double l0 = lr.lambda.real();
  if (std::fabs(lambda - l0) <= 1e-15 * l0) return lr;
  const double a = std::log(l0);
  const double b = std::log(lambda);
  continue_along(
      lr, [a, b](double t) { return cplx(std::exp((1 - t) * a + t * b), 0); });
  return lr;
}

cplx dx_dlambda(const PolyInstance& f, cplx x) {
  if (f.lambda == 0.0)
    throw std::invalid_argument("derivative needs lambda != 0");
  const double q = static_cast<double>(f.n - f.p);
  const cplx g = q * x - static_cast<double>(f.p);
  if (std::abs(g) <= 1e-12 * (q * std::abs(x) + f.p))
    throw std::domain_error("branch derivative undefined at the double root");
  return x * (x + 1.0) / (f.lambda * g);
}

PairingReport modulus_pairing_check(const PolyInstance& f, double tol) {
  if (std::fabs(f.lambda.imag()) > 1e-12 * (1.0 + std::abs(f.lambda)))
    throw std::invalid_argument("pairing check needs a real parameter");
  const RootSet rs = roots(f);
  PairingReport rep;
  rep.tolerance = tol;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    for (size_t j = i + 1; j < rs.roots.size(); ++j) {
      const cplx a = rs.roots[i];
      const cplx b = rs.roots[j];
      const double scale = std::max(1.0, std::abs(a));
      if (std::fabs(std::abs(a) - std::abs(b)) > tol * scale) continue;
      if (std::abs(a - std::conj(b)) <= 1e-6 * scale) continue;  // conjugates
      const bool both_real = std::fabs(a.imag()) <= 1e-6 * scale &&
                             std::fabs(b.imag()) <= 1e-6 * scale;
      if (both_real) {
        // Two distinct real roots whose moduli merely come close; exact
        // equality cannot be told apart from this numerically.
        rep.ambiguous = true;
      } else {
        ++rep.violations;
      }
    }
  }
  rep.ok = rep.violations == 0;
  return rep;
}

std::vector<std::vector<int>> expected_modulus_groups(int n, int p) {
  PolyInstance probe(n, p, 1.0);
  if (p % 2 == 0 && n % 2 == 0)
    throw std::invalid_argument(
        "even p with even n is not a reduced fraction; no parity case");
  const int s2 = (p % 2 == 1) ? 1 : 0;  // branch offset in half-units
  // Modulus grows with the distance of the branch angle from 0, so group
  // by the folded angle numerator min(m, 2n-m), descending; exact integer
  // keys make ties exact.
  std::vector<std::pair<int, int>> keyed;  // (folded numerator, label)
  for (int j = 0; j < n; ++j) {
    const int m = (2 * j + s2) % (2 * n);
    keyed.emplace_back(std::min(m, 2 * n - m), j);
  }
  std::sort(keyed.begin(), keyed.end(), [](auto a, auto b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::vector<int>> groups;
  for (size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.emplace_back();
    groups.back().push_back(keyed[i].second);
  }
  return groups;
}

OrderingReport modulus_ordering(const LabeledRoots& lr) {
  OrderingReport rep;
  if (lr.p % 2 == 0)
    rep.matched_case = OrderCase::EvenPOddN;
  else
    rep.matched_case =
        (lr.n % 2 == 1) ? OrderCase::OddPOddN : OrderCase::OddPEvenN;
  rep.expected = expected_modulus_groups(lr.n, lr.p);

  std::vector<std::pair<double, int>> keyed;
  for (int j = 0; j < lr.n; ++j)
    keyed.emplace_back(std::abs(lr.x[static_cast<size_t>(j)]), j);
  std::sort(keyed.begin(), keyed.end(), [](auto a, auto b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 ||
        keyed[i - 1].first - keyed[i].first > 1e-6 * std::max(1.0, keyed[i].first))
      rep.groups.emplace_back();
    rep.groups.back().push_back(keyed[i].second);
  }
  for (auto& g : rep.groups) std::sort(g.begin(), g.end());
  rep.ok = rep.groups == rep.expected;
  return rep;
}

}  // namespace balword::poly
