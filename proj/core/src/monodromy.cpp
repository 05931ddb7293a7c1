#include "balword/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace balword::monodromy {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_perm(const Permutation& g, int n) {
  if (g.degree() != n) throw std::invalid_argument("permutation degree mismatch");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v : g.map) {
    if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<size_t>(v)] = true;
  }
}

uint64_t encode(const std::vector<int>& m) {
  uint64_t k = 0;
  for (size_t i = 0; i < m.size(); ++i)
    k |= static_cast<uint64_t>(m[i]) << (8 * i);
  return k;
}

std::vector<int> decode(uint64_t k, int n) {
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = (k >> (8 * i)) & 0xff;
  return m;
}

// Closure of the generated group, as encoded permutations.
std::vector<uint64_t> bfs_closure(const std::vector<std::vector<int>>& gens,
                                  int n) {
  std::vector<int> id(static_cast<size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<uint64_t> seen{encode(id)};
  std::queue<std::vector<int>> work;
  work.push(id);
  std::vector<int> prod(static_cast<size_t>(n));
  while (!work.empty()) {
    const std::vector<int> g = work.front();
    work.pop();
    for (const auto& h : gens) {
      for (int i = 0; i < n; ++i)
        prod[static_cast<size_t>(i)] = g[static_cast<size_t>(h[static_cast<size_t>(i)])];
      if (seen.insert(encode(prod)).second) work.push(prod);
    }
  }
  return {seen.begin(), seen.end()};
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

// Minimal block system merging 0 with seed: refine a union-find under the
// generators until the merged pairs are stable.
std::vector<std::vector<int>> minimal_blocks(
    const std::vector<std::vector<int>>& gens, int n, int seed) {
  Dsu dsu(n);
  std::queue<std::pair<int, int>> work;
  dsu.unite(0, seed);
  work.emplace(0, seed);
  while (!work.empty()) {
    const auto [a, b] = work.front();
    work.pop();
    for (const auto& g : gens) {
      const int x = g[static_cast<size_t>(a)];
      const int y = g[static_cast<size_t>(b)];
      if (dsu.unite(x, y)) work.emplace(x, y);
    }
  }
  std::vector<std::vector<int>> blocks(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(dsu.find(i))].push_back(i);
  std::erase_if(blocks, [](const std::vector<int>& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

// Action of the generators on the blocks of a system, closed into a group
// on the block indices. Returns {order, cyclic}.
std::pair<long long, bool> quotient_shape(
    const std::vector<std::vector<int>>& gens,
    const std::vector<std::vector<int>>& system, int n) {
  const int t = static_cast<int>(system.size());
  std::vector<int> block_of(static_cast<size_t>(n), -1);
  for (int b = 0; b < t; ++b)
    for (int v : system[static_cast<size_t>(b)])
      block_of[static_cast<size_t>(v)] = b;

  std::vector<std::vector<int>> qgens;
  for (const auto& g : gens) {
    std::vector<int> q(static_cast<size_t>(t), -1);
    for (int b = 0; b < t; ++b) {
      for (int v : system[static_cast<size_t>(b)]) {
        const int ib = block_of[static_cast<size_t>(g[static_cast<size_t>(v)])];
        if (q[static_cast<size_t>(b)] < 0)
          q[static_cast<size_t>(b)] = ib;
        else if (q[static_cast<size_t>(b)] != ib)
          throw std::logic_error("partition is not a block system");
      }
    }
    qgens.push_back(q);
  }
  const std::vector<uint64_t> closure = bfs_closure(qgens, t);
  const long long order = static_cast<long long>(closure.size());
  bool cyclic = false;
  for (uint64_t k : closure) {
    Permutation g{decode(k, t)};
    if (g.order() == order) {
      cyclic = true;
      break;
    }
  }
  return {order, cyclic};
}

}  // namespace

Permutation Permutation::identity(int n) {
  Permutation g;
  g.map.resize(static_cast<size_t>(n));
  std::iota(g.map.begin(), g.map.end(), 0);
  return g;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (map[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation g;
  g.map.resize(map.size());
  for (int i = 0; i < degree(); ++i)
    g.map[static_cast<size_t>(map[static_cast<size_t>(i)])] = i;
  return g;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(map.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || map[static_cast<size_t>(i)] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = map[static_cast<size_t>(j)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long long Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles())
    ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch");
  Permutation c;
  c.map.resize(a.map.size());
  for (int i = 0; i < a.degree(); ++i)
    c.map[static_cast<size_t>(i)] =
        a.map[static_cast<size_t>(b.map[static_cast<size_t>(i)])];
  return c;
}

Permutation track_loop(const poly::LabeledRoots& start, const LoopPath& loop) {
  if (!(loop.radius > 0)) throw std::invalid_argument("loop radius must be positive");
  if (loop.orientation != 1 && loop.orientation != -1)
    throw std::invalid_argument("orientation must be +1 or -1");
  const std::complex<double> base_point =
      loop.center + loop.radius * std::complex<double>(std::cos(loop.base_angle),
                                                       std::sin(loop.base_angle));
  if (std::abs(base_point - start.lambda) >
      1e-9 * std::max(1.0, std::abs(start.lambda)))
    throw std::invalid_argument("start labels are not based at the loop's base point");

  poly::LabeledRoots lr = start;
  const std::complex<double> center = loop.center;
  const double radius = loop.radius;
  const double base = loop.base_angle;
  const double orient = loop.orientation;
  poly::TrackOptions opts;
  opts.initial_steps = loop.samples;
  opts.max_steps = loop.refine_limit;
  continue_along(
      lr,
      [center, radius, base, orient](double t) {
        const double th = base + orient * 2.0 * kPi * t;
        return center + radius * std::complex<double>(std::cos(th), std::sin(th));
      },
      opts);

  // Read the permutation off the endpoints: root i must land on a unique
  // start position.
  const int n = start.n;
  double minsep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      minsep = std::min(minsep, std::abs(start.x[static_cast<size_t>(i)] -
                                         start.x[static_cast<size_t>(j)]));
  Permutation perm;
  perm.map.assign(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(lr.x[static_cast<size_t>(i)] -
                                start.x[static_cast<size_t>(j)]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best < 0 || bd > minsep / 3.0 || used[static_cast<size_t>(best)])
      throw std::runtime_error("loop endpoints do not match the start configuration");
    used[static_cast<size_t>(best)] = true;
    perm.map[static_cast<size_t>(i)] = best;
  }
  return perm;
}

Permutation loop_around_zero(int n, int p, double eps) {
  const poly::LabeledRoots lr = poly::initial_labels(n, p, eps);
  LoopPath loop;
  loop.center = 0;
  loop.radius = lr.lambda.real();
  loop.orientation = +1;
  loop.base_angle = 0;
  return track_loop(lr, loop);
}

CriticalLoop loop_around_critical(int n, int p, double rho_fraction) {
  if (!(rho_fraction > 0 && rho_fraction < 0.5))
    throw std::invalid_argument("rho fraction must lie in (0, 1/2)");
  const poly::CriticalData cd = poly::critical_data(n, p);
  CriticalLoop out;
  out.rho = rho_fraction * cd.lambda_crit;
  out.lambda_base = cd.lambda_crit - out.rho;

  const poly::LabeledRoots lr = poly::labeled_roots(n, p, out.lambda_base);
  LoopPath loop;
  loop.center = cd.lambda_crit;
  loop.radius = out.rho;
  loop.orientation = +1;
  loop.base_angle = kPi;  // start at center - rho = the base point
  out.perm = track_loop(lr, loop);

  std::vector<int> moved;
  for (int i = 0; i < n; ++i)
    if (out.perm.map[static_cast<size_t>(i)] != i) moved.push_back(i);
  if (moved.size() == 2) out.swapped = {moved[0], moved[1]};
  return out;
}

GroupReport generated_group(const std::vector<Permutation>& gens, int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("group closure limited to degree 8");
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  for (const Permutation& g : gens) validate_perm(g, n);

  std::vector<std::vector<int>> raw;
  for (const Permutation& g : gens) raw.push_back(g.map);

  GroupReport rep;
  const std::vector<uint64_t> closure = bfs_closure(raw, n);
  rep.order = static_cast<unsigned long>(closure.size());

  // Orbit of 0.
  std::vector<bool> orbit(static_cast<size_t>(n), false);
  orbit[0] = true;
  std::queue<int> oq;
  oq.push(0);
  while (!oq.empty()) {
    const int v = oq.front();
    oq.pop();
    for (const auto& g : raw) {
      const int w = g[static_cast<size_t>(v)];
      if (!orbit[static_cast<size_t>(w)]) {
        orbit[static_cast<size_t>(w)] = true;
        oq.push(w);
      }
    }
  }
  rep.transitive =
      std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });

  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
  rep.is_symmetric = rep.order == fac;

  if (rep.transitive) {
    for (int seed = 1; seed < n; ++seed) {
      auto blocks = minimal_blocks(raw, n, seed);
      const size_t count = blocks.size();
      if (count <= 1 || count >= static_cast<size_t>(n)) continue;
      if (std::find(rep.systems.begin(), rep.systems.end(), blocks) ==
          rep.systems.end())
        rep.systems.push_back(std::move(blocks));
    }
    std::sort(rep.systems.begin(), rep.systems.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }
  if (!rep.systems.empty()) {
    rep.blocks = rep.systems.front();  // finest: most blocks
    const auto [qorder, qcyc] = quotient_shape(raw, rep.blocks, n);
    rep.quotient_order = static_cast<int>(qorder);
    rep.quotient_cyclic = qcyc;
  }
  return rep;
}

GaloisReport galois_classify(int n, int p) {
  if (!(0 < p && p < n) || n > 8)
    throw std::invalid_argument("need 0 < p < n <= 8");
  GaloisReport rep;
  rep.n = n;
  rep.p = p;
  rep.t = static_cast<int>(std::gcd(n, p));
  rep.sigma_zero = loop_around_zero(n, p);
  rep.sigma_crit = loop_around_critical(n, p).perm;
  rep.group = generated_group({rep.sigma_zero, rep.sigma_crit}, n);

  if (rep.t == 1) {
    mpz_fac_ui(rep.expected_order.get_mpz_t(), static_cast<unsigned long>(n));
    rep.structure_matches = rep.group.is_symmetric;
  } else {
    mpz_class part;
    mpz_fac_ui(part.get_mpz_t(), static_cast<unsigned long>(n / rep.t));
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), part.get_mpz_t(),
               static_cast<unsigned long>(rep.t));
    rep.expected_order = rep.t * power;
    // Shape: t blocks of size n/t whose quotient action is cyclic C_t.
    rep.structure_matches = false;
    std::vector<std::vector<int>> raw{rep.sigma_zero.map, rep.sigma_crit.map};
    for (const auto& sys : rep.group.systems) {
      if (sys.size() != static_cast<size_t>(rep.t)) continue;
      bool even = true;
      for (const auto& b : sys)
        if (b.size() != static_cast<size_t>(n / rep.t)) even = false;
      if (!even) continue;
      const auto [qorder, qcyc] = quotient_shape(raw, sys, n);
      if (qorder == rep.t && qcyc) {
        rep.structure_matches = true;
        break;
      }
    }
  }
  rep.order_matches = rep.group.order == rep.expected_order;
  return rep;
}

}  // namespace balword::monodromy
