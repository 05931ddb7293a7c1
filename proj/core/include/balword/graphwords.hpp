#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "balword/transfer.hpp"

namespace balword::graphwords {

// Directed multigraph on V vertices whose edges carry a color in {0, 1}.
// Multiplicities are stored transposed: a0[u*V + v] counts the 0-colored
// edges v -> u (target row, source column), so a counting step is a
// plain matrix-vector product on column vectors of path counts.
struct TwoColoredGraph {
  long long V = 0;
  std::vector<long long> a0;  // V*V, row major, target-major
  std::vector<long long> a1;

  long long& at0(long long target, long long source);
  long long& at1(long long target, long long source);
  long long at0(long long target, long long source) const;
  long long at1(long long target, long long source) const;

  bool has_edges_of_both_colors() const;

  // One vertex with one loop of each color: paths are plain binary words.
  static TwoColoredGraph single_vertex();

  // Text format: first line V, then one line per edge "u v color mult"
  // meaning mult parallel edges u -> v of that color. Blank lines and
  // lines starting with '#' are skipped. Throws with a line number on
  // malformed input.
  static TwoColoredGraph parse(std::istream& in);
  static TwoColoredGraph load(const std::string& path);
};

// Path counts stratified by the deviation state, state-major:
// c[(state)*V + vertex]. State i corresponds to deviation i - r + 1, as
// in words::CountVector.
struct PathCountTable {
  long long V = 0;
  long long r = 0;
  long long length = 0;
  std::vector<mpz_class> c;

  mpz_class total() const;
  const mpz_class& at(long long state, long long vertex) const;
};

// Counts paths of the given length whose color word is (alpha, r)-balanced,
// alpha = p/nper. Paths may start at the listed vertices (all vertices
// when the list is empty) and end anywhere.
PathCountTable count_balanced_paths(const TwoColoredGraph& g, long long length,
                                    long long p, long long nper, long long r,
                                    const std::vector<long long>& start = {});

// The lifted one-step matrix on deviation x vertex states, dim = 2r*V.
// NoIncrement steps allow a 1-edge in place (E (x) A1) or a 0-edge one
// state up (N+ (x) A0); Increment steps allow a 0-edge in place and a
// 1-edge one state down.
struct KronMatrix {
  long long V = 0;
  long long r = 0;
  std::vector<mpz_class> a;  // dim*dim, row major

  long long dim() const { return 2 * r * V; }
  const mpz_class& at(long long i, long long j) const;
  mpz_class& at(long long i, long long j);
};

KronMatrix kron_transfer(const TwoColoredGraph& g, long long r,
                         transfer::StepKind kind);

// Product over one period of the floor schedule, later steps to the left.
KronMatrix period_product(const TwoColoredGraph& g, long long p, long long nper,
                          long long r);

struct GraphGrowth {
  long long p = 0, nper = 0, r = 0;
  double perron = 0;    // dominant eigenvalue of the period product
  double e = 0;         // perron^(1/nper)
  bool irreducible = false;  // period product strongly connected
  bool converged = false;
  bool lossy_conversion = false;
};

// Growth exponent of balanced-path counts: the Perron root of the period
// product via power iteration, with a strong-connectivity check on its
// support. Reducible products fall back to iterating on P + I.
GraphGrowth graph_growth(const TwoColoredGraph& g, long long p, long long nper,
                         long long r);

struct ConjectureRow {
  long long r = 0;
  double e = 0;
};

struct ConjectureTable {
  long long p = 0, nper = 0;
  std::vector<ConjectureRow> rows;  // e_r for the requested window ladder
  double e_tilde = 0;   // end-constrained growth, the conjectured limit
  long long horizon = 0;  // path length used for e_tilde
};

// e_r for each r in the ladder plus the end-constrained rate e_tilde
// (paths of length 40*nper whose final zero count lands within 1 of
// alpha * length), for eyeballing e_r -> e_tilde. Reports data only.
ConjectureTable conjecture_scan(const TwoColoredGraph& g, long long p,
                                long long nper,
                                const std::vector<long long>& r_ladder);

}  // namespace balword::graphwords
