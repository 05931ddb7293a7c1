#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "balword/words.hpp"

namespace balword::transfer {

enum class StepKind { NoIncrement, Increment };

// Per-letter floor increments of alpha*k over one period: schedule[k-1]
// is Increment exactly when floor(alpha*k) > floor(alpha*(k-1)). With
// alpha = p/n in lowest terms this happens for exactly p of the n steps.
std::vector<StepKind> floor_schedule(long long p, long long n);

// Dense square big-integer matrix over the 2r deviation states, row
// major. Row/column index i corresponds to deviation i - r + 1, matching
// words::CountVector.
struct TransferMatrix {
  long long p = 0;
  long long n = 0;
  long long r = 0;
  std::vector<mpz_class> a;

  long long dim() const { return 2 * r; }
  const mpz_class& at(long long i, long long j) const {
    return a[static_cast<size_t>(i * dim() + j)];
  }
  mpz_class& at(long long i, long long j) {
    return a[static_cast<size_t>(i * dim() + j)];
  }
};

// E + N_+ (identity plus subdiagonal of ones) for NoIncrement, E + N_-
// (identity plus superdiagonal) for Increment, at window size 2r.
TransferMatrix step_matrix(StepKind kind, long long r);

// Ordered product of one period's step matrices: applying the result to a
// count vector advances it by n letters, b(L + n) = M b(L). In
// particular M applied to the unit vector at deviation 0 gives the counts
// b(n).
TransferMatrix build_M(long long p, long long n, long long r);

// M * v as count vectors; v.length advances by m.n.
words::CountVector apply(const TransferMatrix& m, const words::CountVector& v);

// Exact determinant (Bareiss fraction-free elimination). Every period
// product is unimodular: the step factors are unitriangular.
mpz_class determinant(const TransferMatrix& m);

// n^n / (p^p q^q) with q = n - p: the exclusive upper bound for the
// spectrum of every M(p/n, r), independent of r.
double spectral_ceiling(long long p, long long n);

// Plain double image of the matrix. lossy is set when some entry exceeds
// 2^53 and the conversion may have rounded.
struct DenseMatrix {
  long long dim = 0;
  std::vector<double> a;
  bool lossy = false;

  double at(long long i, long long j) const {
    return a[static_cast<size_t>(i * dim + j)];
  }
};
DenseMatrix to_double(const TransferMatrix& m);

struct PerronResult {
  double value = 0;
  std::vector<double> vector;  // scaled to unit maximum entry
  long long iterations = 0;
  bool converged = false;
  bool positive_vector = false;
  bool lossy_conversion = false;
};

// Power iteration started from the all-ones vector. Converged when two
// successive Rayleigh quotients differ by less than tol; hard cap 10^6
// iterations.
PerronResult perron_root(const TransferMatrix& m, double tol = 1e-12);

struct GrowthEstimate {
  long long p = 0, n = 0, r = 0;
  double e = 0;              // perron(M)^(1/n)
  double ceiling = 0;        // n^n / (p^p q^q)
  double entropy_limit = 0;  // ceiling^(1/n), the r -> infinity limit of e
  double perron = 0;
  bool converged = false;
  bool lossy_conversion = false;
};

// Growth exponent of the balanced-word counts for alpha = p/n at window
// half-width r, via the period matrix's dominant eigenvalue.
GrowthEstimate growth_exponent(long long p, long long n, long long r,
                               double tol = 1e-12);

struct Eigenpair {
  std::complex<double> value;
  std::vector<std::complex<double>> vector;  // unit 2-norm
  double residual = 0;                       // |Mv - lambda v|_2
};

struct SpectrumReport {
  long long dim = 0;
  std::vector<Eigenpair> pairs;  // sorted by descending real part
  double matrix_norm = 0;        // infinity norm of M
  double tolerance = 0;
  bool residuals_ok = false;
  bool all_real = false;      // |Im| <= 1e-8 * matrix_norm throughout
  bool all_positive = false;  // every real part > 0
  bool all_simple = false;    // pairwise gaps above the realness threshold
  bool lossy_conversion = false;
  double perron = 0;
};

// Dense eigensolve of the full period matrix (QR iteration on a
// Hessenberg reduction). Every eigenpair is residual-checked against the
// double image of M. Refuses dimensions above 200.
SpectrumReport full_spectrum(const TransferMatrix& m, double tol = 1e-9);

// Number of eigenvalues of M(p/n, r) inside the open interval (lo, hi),
// which must satisfy 0 <= lo < hi <= spectral_ceiling(p, n).
long long count_spectrum_in(long long p, long long n, long long r, double lo,
                            double hi);

// Least-squares fit of an eigenvector of M against the two candidate
// power bases {(x_i^j)_j : (x_i+1)^n = lambda x_i^e}, for e = p and
// e = n-p. The middle block of the eigenvalue equation is a binomial
// recurrence solved by geometric sequences in exactly one of the two
// exponent conventions; the fit decides which empirically.
struct BoundaryFit {
  double lambda = 0;
  long long exponent_p = 0, exponent_q = 0;
  double residual_p = 0;  // fit residual for e = p, relative to |v|
  double residual_q = 0;  // fit residual for e = n - p
  long long winner = 0;   // the exponent with the smaller residual
  double win_ratio = 0;   // losing residual / winning residual
  bool roots_clustered = false;
};
BoundaryFit boundary_recurrence_check(long long p, long long n, long long r,
                                      double lambda,
                                      const std::vector<std::complex<double>>& eigvec);

// Sign of det(M - x E) at each grid point by elimination with partial
// pivoting (signs only, rows rescaled freely). Consecutive sign changes
// lower-bound the eigenvalue count between the grid ends; on a grid finer
// than the eigenvalue gaps the count is exact.
struct OscillationScan {
  long long sign_changes = 0;
  std::vector<int> signs;  // -1, 0, +1 per grid point
  bool lossy_conversion = false;
};
OscillationScan oscillation_scan(const TransferMatrix& m,
                                 const std::vector<double>& grid);
OscillationScan oscillation_scan(long long p, long long n, long long r,
                                 const std::vector<double>& grid);

}  // namespace balword::transfer
