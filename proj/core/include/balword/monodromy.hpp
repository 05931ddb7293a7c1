#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "balword/poly.hpp"

namespace balword::monodromy {

struct Permutation {
  std::vector<int> map;  // map[i] = image of i

  static Permutation identity(int n);
  int degree() const { return static_cast<int>(map.size()); }
  bool is_identity() const;
  Permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles only
  long long order() const;
  std::string cycle_string() const;  // "(0 1 4)(2 3)", "()" for identity

  bool operator==(const Permutation&) const = default;
};

// (a * b)(i) = a(b(i)): b acts first. Walking loop A then loop B induces
// the product sigma_B * sigma_A.
Permutation operator*(const Permutation& a, const Permutation& b);

// A circle in the parameter plane, traversed once from the point at
// base_angle. orientation +1 is counterclockwise.
struct LoopPath {
  std::complex<double> center;
  double radius = 0;
  int orientation = +1;
  double base_angle = 0;
  int samples = 64;         // initial subdivision of the loop
  int refine_limit = 1 << 16;  // cap on adaptive substeps
};

// Tracks the labeled roots once around the loop and reads the induced
// permutation off the endpoints: map[i] = j means root i ends where root
// j started. The start configuration must sit on the circle.
Permutation track_loop(const poly::LabeledRoots& start, const LoopPath& loop);

// Permutation of the small-lambda labels under one counterclockwise loop
// around lambda = 0 of radius eps^n. The branch structure gives the full
// cycle j -> j+1 (mod n); the tracked result is returned, not assumed.
Permutation loop_around_zero(int n, int p, double eps = 0.05);

struct CriticalLoop {
  Permutation perm;                 // in the standard real-axis labels
  std::array<int, 2> swapped{-1, -1};  // the transposed labels, sorted
  double lambda_base = 0;           // lambda_crit - rho
  double rho = 0;
};

// Permutation under one counterclockwise loop around the positive
// critical parameter, radius rho = rho_fraction * lambda_crit, based at
// lambda_crit - rho, with labels transported there from small lambda
// along the real axis. Expected: the transposition of the two roots that
// collide at the double point.
CriticalLoop loop_around_critical(int n, int p, double rho_fraction = 0.02);

struct GroupReport {
  mpz_class order;
  bool transitive = false;
  bool is_symmetric = false;                    // order == degree!
  std::vector<std::vector<std::vector<int>>> systems;  // all minimal
                                                       // nontrivial block
                                                       // systems
  std::vector<std::vector<int>> blocks;  // finest system, empty if none
  int quotient_order = 0;                // action on `blocks`
  bool quotient_cyclic = false;
};

// Closure of the generated group by breadth-first products, degree <= 8.
// Block systems come from the minimal-block refinement seeded with each
// pair {0, b}; quotients are closed over the generator images on blocks.
GroupReport generated_group(const std::vector<Permutation>& gens, int n);

struct GaloisReport {
  int n = 0;
  int p = 0;
  int t = 1;  // gcd(n, p)
  Permutation sigma_zero;
  Permutation sigma_crit;
  GroupReport group;
  mpz_class expected_order;     // n! if t = 1, else t ((n/t)!)^t
  bool order_matches = false;
  bool structure_matches = false;  // symmetric when t = 1; otherwise t
                                   // blocks of size n/t with cyclic
                                   // quotient of order t
};

// Runs both monodromy loops for (x+1)^n - lambda x^p, closes the group
// they generate, and compares against the gcd-driven expectation.
GaloisReport galois_classify(int n, int p);

}  // namespace balword::monodromy
