#include "balword/graphwords.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

#include "balword/words.hpp"

namespace balword::graphwords {

namespace {

double log_mpz(const mpz_class& z) {
  signed long e = 0;
  const double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(e) * std::log(2.0);
}

[[noreturn]] void parse_fail(long long line, const std::string& what) {
  throw std::runtime_error("graph parse error at line " +
                           std::to_string(line) + ": " + what);
}

// Forward plus backward reachability from one node covers everything iff
// the digraph is strongly connected.
bool strongly_connected(const std::vector<char>& adj, long long d) {
  if (d == 0) return false;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<bool> seen(static_cast<size_t>(d), false);
    std::queue<long long> q;
    seen[0] = true;
    q.push(0);
    while (!q.empty()) {
      const long long v = q.front();
      q.pop();
      for (long long w = 0; w < d; ++w) {
        const bool edge = dir == 0 ? adj[static_cast<size_t>(v * d + w)]
                                   : adj[static_cast<size_t>(w * d + v)];
        if (edge && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          q.push(w);
        }
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      return false;
  }
  return true;
}

struct PowerOutcome {
  double value = 0;
  bool converged = false;
};

PowerOutcome power_iterate(const std::vector<double>& a, long long d,
                           double tol) {
  std::vector<double> v(static_cast<size_t>(d), 1.0);
  std::vector<double> w(static_cast<size_t>(d), 0.0);
  PowerOutcome out;
  double prev = 0;
  for (long long it = 1; it <= 1000000; ++it) {
    double num = 0;
    double den = 0;
    for (long long i = 0; i < d; ++i) {
      double s = 0;
      for (long long j = 0; j < d; ++j)
        s += a[static_cast<size_t>(i * d + j)] * v[static_cast<size_t>(j)];
      w[static_cast<size_t>(i)] = s;
      num += v[static_cast<size_t>(i)] * s;
      den += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    const double ray = num / den;
    out.value = ray;
    double mx = 0;
    for (double x : w) mx = std::max(mx, std::fabs(x));
    if (mx == 0) break;
    for (long long i = 0; i < d; ++i)
      v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / mx;
    if (it > 1 && std::fabs(ray - prev) < tol) {
      out.converged = true;
      break;
    }
    prev = ray;
  }
  return out;
}

}  // namespace

long long& TwoColoredGraph::at0(long long target, long long source) {
  return a0[static_cast<size_t>(target * V + source)];
}
long long& TwoColoredGraph::at1(long long target, long long source) {
  return a1[static_cast<size_t>(target * V + source)];
}
long long TwoColoredGraph::at0(long long target, long long source) const {
  return a0[static_cast<size_t>(target * V + source)];
}
long long TwoColoredGraph::at1(long long target, long long source) const {
  return a1[static_cast<size_t>(target * V + source)];
}

bool TwoColoredGraph::has_edges_of_both_colors() const {
  const bool any0 = std::any_of(a0.begin(), a0.end(), [](long long m) { return m > 0; });
  const bool any1 = std::any_of(a1.begin(), a1.end(), [](long long m) { return m > 0; });
  return any0 && any1;
}

TwoColoredGraph TwoColoredGraph::single_vertex() {
  TwoColoredGraph g;
  g.V = 1;
  g.a0 = {1};
  g.a1 = {1};
  return g;
}

TwoColoredGraph TwoColoredGraph::parse(std::istream& in) {
  TwoColoredGraph g;
  std::string line;
  long long lineno = 0;
  bool have_v = false;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    if (!have_v) {
      long long v = 0;
      std::string trail;
      if (!(ss >> v) || v < 1 || v > 64 || (ss >> trail))
        parse_fail(lineno, "expected a vertex count between 1 and 64");
      g.V = v;
      g.a0.assign(static_cast<size_t>(v * v), 0);
      g.a1.assign(static_cast<size_t>(v * v), 0);
      have_v = true;
      continue;
    }
    long long u = 0, v = 0, color = 0, mult = 0;
    std::string trail;
    if (!(ss >> u >> v >> color >> mult) || (ss >> trail))
      parse_fail(lineno, "expected 'u v color mult'");
    if (u < 0 || u >= g.V || v < 0 || v >= g.V)
      parse_fail(lineno, "vertex out of range");
    if (color != 0 && color != 1) parse_fail(lineno, "color must be 0 or 1");
    if (mult < 1) parse_fail(lineno, "multiplicity must be positive");
    // The line is an edge u -> v: source u, target v.
    if (color == 0)
      g.at0(v, u) += mult;
    else
      g.at1(v, u) += mult;
  }
  if (!have_v) parse_fail(lineno, "missing vertex count");
  return g;
}

TwoColoredGraph TwoColoredGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse(in);
}

mpz_class PathCountTable::total() const {
  mpz_class t = 0;
  for (const mpz_class& x : c) t += x;
  return t;
}

const mpz_class& PathCountTable::at(long long state, long long vertex) const {
  return c[static_cast<size_t>(state * V + vertex)];
}

PathCountTable count_balanced_paths(const TwoColoredGraph& g, long long length,
                                    long long p, long long nper, long long r,
                                    const std::vector<long long>& start) {
  words::BalanceSpec spec(p, nper, r);
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  for (long long v : start)
    if (v < 0 || v >= g.V)
      throw std::invalid_argument("start vertex out of range");

  const auto sched = transfer::floor_schedule(p, nper);
  const long long V = g.V;
  const long long states = 2 * r;

  PathCountTable tab;
  tab.V = V;
  tab.r = r;
  tab.length = length;
  tab.c.assign(static_cast<size_t>(states * V), mpz_class(0));
  const long long zero_state = r - 1;  // deviation 0
  if (start.empty()) {
    for (long long v = 0; v < V; ++v)
      tab.c[static_cast<size_t>(zero_state * V + v)] = 1;
  } else {
    for (long long v : start)
      tab.c[static_cast<size_t>(zero_state * V + v)] += 1;
  }

  std::vector<mpz_class> next(static_cast<size_t>(states * V));
  for (long long k = 1; k <= length; ++k) {
    const transfer::StepKind kind = sched[static_cast<size_t>((k - 1) % nper)];
    for (auto& x : next) x = 0;
    for (long long i = 0; i < states; ++i) {
      for (long long u = 0; u < V; ++u) {
        mpz_class acc = 0;
        for (long long v = 0; v < V; ++v) {
          if (kind == transfer::StepKind::NoIncrement) {
            // A 0-edge raises the deviation; a 1-edge holds it.
            if (g.at1(u, v) != 0)
              acc += static_cast<long>(g.at1(u, v)) * tab.c[static_cast<size_t>(i * V + v)];
            if (i >= 1 && g.at0(u, v) != 0)
              acc += static_cast<long>(g.at0(u, v)) * tab.c[static_cast<size_t>((i - 1) * V + v)];
          } else {
            // A 0-edge holds the deviation; a 1-edge lowers it.
            if (g.at0(u, v) != 0)
              acc += static_cast<long>(g.at0(u, v)) * tab.c[static_cast<size_t>(i * V + v)];
            if (i + 1 < states && g.at1(u, v) != 0)
              acc += static_cast<long>(g.at1(u, v)) * tab.c[static_cast<size_t>((i + 1) * V + v)];
          }
        }
        next[static_cast<size_t>(i * V + u)] = acc;
      }
    }
    tab.c.swap(next);
  }
  return tab;
}

const mpz_class& KronMatrix::at(long long i, long long j) const {
  return a[static_cast<size_t>(i * dim() + j)];
}
mpz_class& KronMatrix::at(long long i, long long j) {
  return a[static_cast<size_t>(i * dim() + j)];
}

KronMatrix kron_transfer(const TwoColoredGraph& g, long long r,
                         transfer::StepKind kind) {
  if (r < 1) throw std::invalid_argument("window half-width must be positive");
  KronMatrix k;
  k.V = g.V;
  k.r = r;
  const long long d = k.dim();
  k.a.assign(static_cast<size_t>(d * d), mpz_class(0));
  const long long states = 2 * r;
  for (long long i = 0; i < states; ++i) {
    for (long long u = 0; u < g.V; ++u) {
      for (long long v = 0; v < g.V; ++v) {
        if (kind == transfer::StepKind::NoIncrement) {
          k.at(i * g.V + u, i * g.V + v) = static_cast<long>(g.at1(u, v));
          if (i >= 1) k.at(i * g.V + u, (i - 1) * g.V + v) = static_cast<long>(g.at0(u, v));
        } else {
          k.at(i * g.V + u, i * g.V + v) = static_cast<long>(g.at0(u, v));
          if (i + 1 < states) k.at(i * g.V + u, (i + 1) * g.V + v) = static_cast<long>(g.at1(u, v));
        }
      }
    }
  }
  return k;
}

KronMatrix period_product(const TwoColoredGraph& g, long long p, long long nper,
                          long long r) {
  const auto sched = transfer::floor_schedule(p, nper);
  KronMatrix acc = kron_transfer(g, r, sched[0]);
  const long long d = acc.dim();
  KronMatrix prod;
  prod.V = g.V;
  prod.r = r;
  for (size_t k = 1; k < sched.size(); ++k) {
    const KronMatrix step = kron_transfer(g, r, sched[k]);
    prod.a.assign(static_cast<size_t>(d * d), mpz_class(0));
    for (long long i = 0; i < d; ++i)
      for (long long l = 0; l < d; ++l) {
        if (step.at(i, l) == 0) continue;
        for (long long j = 0; j < d; ++j)
          prod.a[static_cast<size_t>(i * d + j)] += step.at(i, l) * acc.at(l, j);
      }
    acc.a.swap(prod.a);
  }
  return acc;
}

GraphGrowth graph_growth(const TwoColoredGraph& g, long long p, long long nper,
                         long long r) {
  words::BalanceSpec spec(p, nper, r);
  const KronMatrix m = period_product(g, p, nper, r);
  const long long d = m.dim();

  GraphGrowth out;
  out.p = p;
  out.nper = nper;
  out.r = r;

  std::vector<char> support(static_cast<size_t>(d * d), 0);
  for (long long i = 0; i < d * d; ++i)
    support[static_cast<size_t>(i)] = m.a[static_cast<size_t>(i)] != 0;
  out.irreducible = strongly_connected(support, d);

  const mpz_class limit = mpz_class(1) << 53;
  std::vector<double> a(static_cast<size_t>(d * d));
  for (long long i = 0; i < d * d; ++i) {
    if (m.a[static_cast<size_t>(i)] > limit) out.lossy_conversion = true;
    a[static_cast<size_t>(i)] = m.a[static_cast<size_t>(i)].get_d();
  }

  PowerOutcome po = power_iterate(a, d, 1e-12);
  if (!po.converged) {
    // Reducible or periodic support can make the iteration cycle; the
    // shifted matrix P + I has the same dominant vector and converges.
    for (long long i = 0; i < d; ++i) a[static_cast<size_t>(i * d + i)] += 1.0;
    po = power_iterate(a, d, 1e-12);
    po.value -= 1.0;
  }
  out.perron = po.value;
  out.converged = po.converged;
  out.e = po.value > 0
              ? std::exp(std::log(po.value) / static_cast<double>(nper))
              : 0.0;
  return out;
}

ConjectureTable conjecture_scan(const TwoColoredGraph& g, long long p,
                                long long nper,
                                const std::vector<long long>& r_ladder) {
  ConjectureTable tab;
  tab.p = p;
  tab.nper = nper;
  for (long long r : r_ladder) {
    const GraphGrowth gr = graph_growth(g, p, nper, r);
    tab.rows.push_back({r, gr.e});
  }

  // End-constrained rate: paths of this length whose zero count lands
  // within the unit window around alpha * length, no prefix constraint.
  const long long n = 40 * nper;
  tab.horizon = n;
  const long long V = g.V;
  std::vector<mpz_class> cur(static_cast<size_t>((n + 1) * V), mpz_class(0));
  std::vector<mpz_class> nxt(static_cast<size_t>((n + 1) * V));
  for (long long v = 0; v < V; ++v) cur[static_cast<size_t>(v)] = 1;  // z = 0
  for (long long k = 1; k <= n; ++k) {
    for (auto& x : nxt) x = 0;
    for (long long z = 0; z < k; ++z) {
      for (long long u = 0; u < V; ++u) {
        mpz_class acc = 0;
        for (long long v = 0; v < V; ++v) {
          if (g.at1(u, v) != 0)
            acc += static_cast<long>(g.at1(u, v)) * cur[static_cast<size_t>(z * V + v)];
          if (z >= 1 && g.at0(u, v) != 0)
            acc += static_cast<long>(g.at0(u, v)) * cur[static_cast<size_t>((z - 1) * V + v)];
        }
        nxt[static_cast<size_t>(z * V + u)] = acc;
      }
    }
    // z = k reachable only by all-zero-colored paths.
    for (long long u = 0; u < V; ++u) {
      mpz_class acc = 0;
      for (long long v = 0; v < V; ++v)
        if (g.at0(u, v) != 0)
          acc += static_cast<long>(g.at0(u, v)) * cur[static_cast<size_t>((k - 1) * V + v)];
      nxt[static_cast<size_t>(k * V + u)] = acc;
    }
    cur.swap(nxt);
  }
  const long long f = p * 40;  // alpha * n exactly
  mpz_class total = 0;
  for (long long z = f; z <= f + 1 && z <= n; ++z)
    for (long long v = 0; v < V; ++v)
      if (z >= 0) total += cur[static_cast<size_t>(z * V + v)];
  tab.e_tilde = total > 0 ? std::exp(log_mpz(total) / static_cast<double>(n)) : 0.0;
  return tab;
}

}  // namespace balword::graphwords
