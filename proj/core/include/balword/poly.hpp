#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace balword::poly {

using cplx = std::complex<double>;

// The one-parameter family P(x) = (x+1)^n - lambda x^p, 0 < p < n <= 64.
// Evaluation works on the unexpanded form, which stays well conditioned
// where the expanded coefficients would not.
struct PolyInstance {
  int n = 0;
  int p = 0;
  cplx lambda;

  PolyInstance(int n_, int p_, cplx lambda_);
};

cplx eval(const PolyInstance& f, cplx x);
cplx deriv(const PolyInstance& f, cplx x);

struct RootSet {
  std::vector<cplx> roots;        // sorted by (Re, Im)
  std::vector<double> residuals;  // relative residuals at the roots
  double min_separation = 0;
  double max_residual = 0;
  bool clustered = false;  // min_separation < 1e-6
};

// All n roots: companion-matrix eigenvalues of the expanded polynomial,
// then Newton polish against the unexpanded form. Deterministic for a
// given instance; requires lambda != 0.
RootSet roots(const PolyInstance& f, double tol = 1e-10);

struct CriticalData {
  double lambda_crit = 0;  // n^n / (p^p (n-p)^(n-p)), evaluated exactly
  double double_root = 0;  // p / (n-p)
  double residual_p = 0;   // |P| at (double_root, lambda_crit), relative
  double residual_dp = 0;  // |P'| there, relative
};
CriticalData critical_data(int n, int p);

// Locates the positive critical parameter without the closed form:
// bisection on the count of real roots (it jumps by 2 when the colliding
// conjugate pair lands on the real axis) brackets the collision, then
// Newton iteration on the system P = dP/dx = 0 in (x, lambda) sharpens
// it to full precision.
struct CriticalSearch {
  double lambda = 0;
  double x = 0;
  int newton_iterations = 0;
  bool converged = false;
};
CriticalSearch detect_critical(int n, int p);

// First-order small-lambda root positions: for lambda = eps^n the n
// branches are x_j = gamma_j - 1 + O(eps^2) where gamma_j runs over the
// n-th roots of (-1)^p lambda, i.e. gamma_j = eps exp(2 pi i (j + s)/n)
// with s = 0 for even p, s = 1/2 for odd p.
struct SmallLambdaRoots {
  double eps = 0;
  std::vector<cplx> approx;   // first-order positions, index j
  std::vector<cplx> gamma;    // the branch values
  std::vector<cplx> matched;  // true roots matched to the labels
  double max_match_error = 0;
};
SmallLambdaRoots small_lambda_roots(int n, int p, double eps);

// Roots carrying the small-lambda branch labels: x[j] is the continuation
// of the branch that starts at angle 2 pi (j + s)/n around -1.
struct LabeledRoots {
  int n = 0;
  int p = 0;
  cplx lambda;
  std::vector<cplx> x;
};

struct TrackOptions {
  int initial_steps = 64;        // first subdivision of the path
  int max_steps = 1 << 16;       // hard cap on accepted steps
  double step_fraction = 1.0 / 3.0;  // max root move per step, in units of
                                     // the current minimal separation
};

// Labeled roots at lambda = eps^n.
LabeledRoots initial_labels(int n, int p, double eps);

// Continues the labeled roots along lambda(t), t in [0, 1]. Predictor:
// the parameter derivative dx/dlambda; corrector: Newton on P. A step is
// halved whenever a root would move farther than step_fraction times the
// current minimal root separation, which is what keeps labels from ever
// jumping between branches. Throws on refinement-limit exhaustion.
void continue_along(LabeledRoots& lr, const std::function<cplx(double)>& path,
                    const TrackOptions& opts = {});

// Standard labels at real lambda > 0: transported from the small-lambda
// configuration along the positive real axis, interpolating
// geometrically in lambda (the motion is uniform in log lambda near 0).
LabeledRoots labeled_roots(int n, int p, double lambda, double eps = 0.05);

// dx/dlambda = x (x+1) / (lambda ((n-p) x - p)) along P(x, lambda) = 0.
// Rejects evaluation at the removable singularity (n-p) x = p, where the
// branch itself is singular (the double root).
cplx dx_dlambda(const PolyInstance& f, cplx x);

// For real lambda, checks that any two distinct roots of equal modulus
// are complex conjugates of each other. Nearly equal moduli of nearly
// real roots (which occur close to the collision) are flagged as
// ambiguous rather than failed.
struct PairingReport {
  bool ok = true;
  bool ambiguous = false;
  int violations = 0;
  double tolerance = 0;
};
PairingReport modulus_pairing_check(const PolyInstance& f, double tol = 1e-8);

// Modulus order of the labeled roots against the expected pattern, which
// depends only on the parities of p and n (three admissible cases; even
// p with even n cannot be in lowest terms and is rejected). The expected
// groups follow cos(2 pi (j + s)/n): the further the branch angle is
// from 0, the larger the modulus, with ties exactly between reflected
// angles.
enum class OrderCase { EvenPOddN, OddPOddN, OddPEvenN };

struct OrderingReport {
  OrderCase matched_case = OrderCase::EvenPOddN;
  bool ok = false;
  std::vector<std::vector<int>> groups;    // observed, descending modulus
  std::vector<std::vector<int>> expected;  // from the parity pattern
};
OrderingReport modulus_ordering(const LabeledRoots& lr);

// The parity-determined grouping of labels by modulus, descending.
std::vector<std::vector<int>> expected_modulus_groups(int n, int p);

}  // namespace balword::poly
