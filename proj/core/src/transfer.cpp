#include "balword/transfer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "balword/poly.hpp"

namespace balword::transfer {

namespace {

const mpz_class kDoubleExactLimit = mpz_class(1) << 53;

TransferMatrix identity_matrix(long long p, long long n, long long r) {
  TransferMatrix m;
  m.p = p;
  m.n = n;
  m.r = r;
  m.a.assign(static_cast<size_t>(4 * r * r), mpz_class(0));
  for (long long i = 0; i < 2 * r; ++i) m.at(i, i) = 1;
  return m;
}

// Left-multiply by E + N_+: row i gains the old row i-1. Descending i
// keeps the old rows intact until used.
void apply_no_increment(TransferMatrix& m) {
  const long long d = m.dim();
  for (long long i = d - 1; i >= 1; --i)
    for (long long j = 0; j < d; ++j) m.at(i, j) += m.at(i - 1, j);
}

// Left-multiply by E + N_-: row i gains the old row i+1.
void apply_increment(TransferMatrix& m) {
  const long long d = m.dim();
  for (long long i = 0; i + 1 < d; ++i)
    for (long long j = 0; j < d; ++j) m.at(i, j) += m.at(i + 1, j);
}

Eigen::MatrixXd to_eigen(const DenseMatrix& d) {
  Eigen::MatrixXd a(d.dim, d.dim);
  for (long long i = 0; i < d.dim; ++i)
    for (long long j = 0; j < d.dim; ++j) a(i, j) = d.at(i, j);
  return a;
}

// Sign of det(a) by partial-pivot elimination. Only signs matter, so rows
// are rescaled whenever their magnitude drifts out of double range.
int eliminate_sign(std::vector<double>& a, long long d) {
  int sgn = 1;
  auto at = [&](long long i, long long j) -> double& {
    return a[static_cast<size_t>(i * d + j)];
  };
  for (long long k = 0; k < d; ++k) {
    long long piv = k;
    for (long long i = k + 1; i < d; ++i)
      if (std::fabs(at(i, k)) > std::fabs(at(piv, k))) piv = i;
    if (at(piv, k) == 0.0) return 0;
    if (piv != k) {
      for (long long j = k; j < d; ++j) std::swap(at(piv, j), at(k, j));
      sgn = -sgn;
    }
    if (at(k, k) < 0) sgn = -sgn;
    for (long long i = k + 1; i < d; ++i) {
      const double f = at(i, k) / at(k, k);
      at(i, k) = 0;
      double mx = 0;
      for (long long j = k + 1; j < d; ++j) {
        at(i, j) -= f * at(k, j);
        mx = std::max(mx, std::fabs(at(i, j)));
      }
      if (mx > 1e180 || (mx > 0 && mx < 1e-180)) {
        const double s = 1.0 / mx;
        for (long long j = k + 1; j < d; ++j) at(i, j) *= s;
      }
    }
  }
  return sgn;
}

}  // namespace

std::vector<StepKind> floor_schedule(long long p, long long n) {
  words::BalanceSpec spec(p, n, 1);  // validates p/n reduced and in range
  std::vector<StepKind> sched(static_cast<size_t>(n));
  for (long long k = 1; k <= n; ++k)
    sched[static_cast<size_t>(k - 1)] =
        spec.floor_alpha(k) > spec.floor_alpha(k - 1) ? StepKind::Increment
                                                      : StepKind::NoIncrement;
  return sched;
}

TransferMatrix step_matrix(StepKind kind, long long r) {
  if (r < 1) throw std::invalid_argument("window half-width must be positive");
  TransferMatrix m =
      identity_matrix(kind == StepKind::Increment ? 1 : 0, 1, r);
  if (kind == StepKind::NoIncrement)
    apply_no_increment(m);
  else
    apply_increment(m);
  return m;
}

TransferMatrix build_M(long long p, long long n, long long r) {
  const std::vector<StepKind> sched = floor_schedule(p, n);
  if (r < 1) throw std::invalid_argument("window half-width must be positive");
  TransferMatrix m = identity_matrix(p, n, r);
  for (StepKind kind : sched) {
    if (kind == StepKind::NoIncrement)
      apply_no_increment(m);
    else
      apply_increment(m);
  }
  return m;
}

words::CountVector apply(const TransferMatrix& m, const words::CountVector& v) {
  if (v.r != m.r)
    throw std::invalid_argument("count vector window does not match matrix");
  const long long d = m.dim();
  words::CountVector out;
  out.length = v.length + m.n;
  out.r = v.r;
  out.b.assign(static_cast<size_t>(d), mpz_class(0));
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      out.b[static_cast<size_t>(i)] += m.at(i, j) * v.b[static_cast<size_t>(j)];
  return out;
}

mpz_class determinant(const TransferMatrix& m) {
  const long long d = m.dim();
  std::vector<mpz_class> a = m.a;
  auto at = [&](long long i, long long j) -> mpz_class& {
    return a[static_cast<size_t>(i * d + j)];
  };
  int sgn = 1;
  mpz_class prev = 1;
  for (long long k = 0; k + 1 < d; ++k) {
    if (at(k, k) == 0) {
      long long piv = -1;
      for (long long i = k + 1; i < d; ++i)
        if (at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (long long j = k; j < d; ++j) std::swap(at(piv, j), at(k, j));
      sgn = -sgn;
    }
    for (long long i = k + 1; i < d; ++i) {
      for (long long j = k + 1; j < d; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  mpz_class det = at(d - 1, d - 1);
  if (sgn < 0) det = -det;
  return det;
}

double spectral_ceiling(long long p, long long n) {
  words::BalanceSpec spec(p, n, 1);
  const double pd = static_cast<double>(p);
  const double nd = static_cast<double>(n);
  const double qd = nd - pd;
  return std::exp(nd * std::log(nd) - pd * std::log(pd) - qd * std::log(qd));
}

DenseMatrix to_double(const TransferMatrix& m) {
  DenseMatrix d;
  d.dim = m.dim();
  d.a.resize(m.a.size());
  for (size_t k = 0; k < m.a.size(); ++k) {
    if (m.a[k] > kDoubleExactLimit) d.lossy = true;
    d.a[k] = m.a[k].get_d();
  }
  return d;
}

PerronResult perron_root(const TransferMatrix& m, double tol) {
  const DenseMatrix d = to_double(m);
  const long long dim = d.dim;
  PerronResult res;
  res.lossy_conversion = d.lossy;
  std::vector<double> v(static_cast<size_t>(dim), 1.0);
  std::vector<double> w(static_cast<size_t>(dim), 0.0);
  double ray_prev = std::numeric_limits<double>::quiet_NaN();
  const long long cap = 1000000;
  for (long long it = 1; it <= cap; ++it) {
    double num = 0;
    double den = 0;
    for (long long i = 0; i < dim; ++i) {
      double s = 0;
      for (long long j = 0; j < dim; ++j)
        s += d.at(i, j) * v[static_cast<size_t>(j)];
      w[static_cast<size_t>(i)] = s;
      num += v[static_cast<size_t>(i)] * s;
      den += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    const double ray = num / den;
    res.value = ray;
    res.iterations = it;
    double mx = 0;
    for (long long i = 0; i < dim; ++i)
      mx = std::max(mx, std::fabs(w[static_cast<size_t>(i)]));
    if (mx == 0) break;  // nilpotent in doubles; value is already 0
    for (long long i = 0; i < dim; ++i)
      v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / mx;
    if (it > 1 && std::fabs(ray - ray_prev) < tol) {
      res.converged = true;
      break;
    }
    ray_prev = ray;
  }
  res.vector = v;
  res.positive_vector = true;
  for (double x : res.vector)
    if (!(x > 0)) res.positive_vector = false;
  return res;
}

GrowthEstimate growth_exponent(long long p, long long n, long long r,
                               double tol) {
  const TransferMatrix m = build_M(p, n, r);
  const PerronResult pr = perron_root(m, tol);
  GrowthEstimate g;
  g.p = p;
  g.n = n;
  g.r = r;
  g.perron = pr.value;
  g.e = std::exp(std::log(pr.value) / static_cast<double>(n));
  g.ceiling = spectral_ceiling(p, n);
  g.entropy_limit = std::exp(std::log(g.ceiling) / static_cast<double>(n));
  g.converged = pr.converged;
  g.lossy_conversion = pr.lossy_conversion;
  return g;
}

SpectrumReport full_spectrum(const TransferMatrix& m, double tol) {
  if (m.dim() > 200)
    throw std::invalid_argument("full spectrum limited to dimension 200");
  const DenseMatrix d = to_double(m);
  const Eigen::MatrixXd a = to_eigen(d);
  SpectrumReport rep;
  rep.dim = d.dim;
  rep.lossy_conversion = d.lossy;
  rep.matrix_norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  rep.tolerance = tol;

  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
  rep.pairs.resize(static_cast<size_t>(d.dim));
  for (long long k = 0; k < d.dim; ++k) {
    Eigenpair& ep = rep.pairs[static_cast<size_t>(k)];
    ep.value = es.eigenvalues()(k);
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    v.normalize();
    ep.residual = (ac * v - ep.value * v).norm();
    ep.vector.assign(v.data(), v.data() + v.size());
  }
  std::sort(rep.pairs.begin(), rep.pairs.end(),
            [](const Eigenpair& x, const Eigenpair& y) {
              if (x.value.real() != y.value.real())
                return x.value.real() > y.value.real();
              return x.value.imag() > y.value.imag();
            });

  const double scale = std::max(1.0, rep.matrix_norm);
  const double thr = 1e-8 * scale;
  rep.residuals_ok = true;
  rep.all_real = true;
  rep.all_positive = true;
  for (const Eigenpair& ep : rep.pairs) {
    if (ep.residual > tol * scale) rep.residuals_ok = false;
    if (std::fabs(ep.value.imag()) > thr) rep.all_real = false;
    if (!(ep.value.real() > 0)) rep.all_positive = false;
  }
  rep.all_simple = true;
  for (size_t k = 0; k + 1 < rep.pairs.size(); ++k)
    if (std::abs(rep.pairs[k].value - rep.pairs[k + 1].value) <= thr)
      rep.all_simple = false;
  rep.perron = rep.pairs.empty() ? 0 : rep.pairs.front().value.real();
  return rep;
}

long long count_spectrum_in(long long p, long long n, long long r, double lo,
                            double hi) {
  const double bound = spectral_ceiling(p, n);
  if (!(0 <= lo && lo < hi && hi <= bound))
    throw std::invalid_argument(
        "interval must sit inside (0, n^n/(p^p q^q))");
  const SpectrumReport rep = full_spectrum(build_M(p, n, r));
  const double thr = 1e-8 * std::max(1.0, rep.matrix_norm);
  long long count = 0;
  for (const Eigenpair& ep : rep.pairs)
    if (std::fabs(ep.value.imag()) <= thr && lo < ep.value.real() &&
        ep.value.real() < hi)
      ++count;
  return count;
}

BoundaryFit boundary_recurrence_check(
    long long p, long long n, long long r, double lambda,
    const std::vector<std::complex<double>>& eigvec) {
  words::BalanceSpec spec(p, n, r);
  if (n > 64) throw std::invalid_argument("period limited to 64");
  if (r < n)
    throw std::invalid_argument(
        "window must be at least the period for a meaningful fit");
  if (eigvec.size() != static_cast<size_t>(2 * r))
    throw std::invalid_argument("eigenvector length must be 2r");
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");

  Eigen::VectorXcd rhs(2 * r);
  for (long long j = 0; j < 2 * r; ++j) rhs(j) = eigvec[static_cast<size_t>(j)];
  const double vnorm = rhs.norm();
  if (vnorm == 0) throw std::invalid_argument("eigenvector must be nonzero");

  BoundaryFit fit;
  fit.lambda = lambda;
  fit.exponent_p = p;
  fit.exponent_q = n - p;

  for (int which = 0; which < 2; ++which) {
    const long long e = which == 0 ? p : n - p;
    const poly::RootSet rs =
        poly::roots(poly::PolyInstance(static_cast<int>(n),
                                       static_cast<int>(e), lambda));
    if (rs.clustered) fit.roots_clustered = true;
    Eigen::MatrixXcd basis(2 * r, n);
    for (long long i = 0; i < n; ++i) {
      std::complex<double> pw = 1.0;
      for (long long j = 0; j < 2 * r; ++j) {
        basis(j, i) = pw;
        pw *= rs.roots[static_cast<size_t>(i)];
      }
      basis.col(i) /= basis.col(i).norm();
    }
    const Eigen::VectorXcd c = basis.colPivHouseholderQr().solve(rhs);
    const double resid = (basis * c - rhs).norm() / vnorm;
    if (which == 0)
      fit.residual_p = resid;
    else
      fit.residual_q = resid;
  }

  if (fit.residual_p <= fit.residual_q) {
    fit.winner = p;
    fit.win_ratio = fit.residual_q / std::max(fit.residual_p, 1e-300);
  } else {
    fit.winner = n - p;
    fit.win_ratio = fit.residual_p / std::max(fit.residual_q, 1e-300);
  }
  return fit;
}

OscillationScan oscillation_scan(const TransferMatrix& m,
                                 const std::vector<double>& grid) {
  for (size_t k = 0; k + 1 < grid.size(); ++k)
    if (!(grid[k] < grid[k + 1]))
      throw std::invalid_argument("grid must be strictly increasing");
  const DenseMatrix d = to_double(m);
  OscillationScan scan;
  scan.lossy_conversion = d.lossy;
  scan.signs.reserve(grid.size());
  std::vector<double> scratch;
  for (double x : grid) {
    scratch = d.a;
    for (long long i = 0; i < d.dim; ++i)
      scratch[static_cast<size_t>(i * d.dim + i)] -= x;
    scan.signs.push_back(eliminate_sign(scratch, d.dim));
  }
  // A strict flip witnesses an eigenvalue between the points; an exact
  // zero witnesses one at the point itself. Both lower-bound the count.
  for (size_t k = 0; k + 1 < scan.signs.size(); ++k)
    if (scan.signs[k] * scan.signs[k + 1] < 0) ++scan.sign_changes;
  for (int s : scan.signs)
    if (s == 0) ++scan.sign_changes;
  return scan;
}

OscillationScan oscillation_scan(long long p, long long n, long long r,
                                 const std::vector<double>& grid) {
  return oscillation_scan(build_M(p, n, r), grid);
}

}  // namespace balword::transfer
