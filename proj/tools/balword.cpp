// Command-line front end: exact balanced-word counts, growth exponents,
// transfer spectra, parameter-family root geometry, monodromy groups, and
// the two-colored-graph generalization. Output is deterministic: no
// timestamps, fixed float formatting, sorted JSON keys.

#include <cstdio>
#include <cstdlib>
#include <complex>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "balword/asympt.hpp"
#include "balword/graphwords.hpp"
#include "balword/monodromy.hpp"
#include "balword/poly.hpp"
#include "balword/transfer.hpp"
#include "balword/words.hpp"

using nlohmann::json;
using namespace balword;

namespace {

constexpr const char* kVersion = "balword 0.1.0";

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Strict p/n fraction: digits, one slash, digits, already in lowest terms.
std::pair<long long, long long> parse_alpha(const std::string& s) {
  const auto [p, n] = parse_fraction(s);
  if (std::gcd(p, n) != 1)
    throw CLI::ValidationError("--alpha", "fraction must be in lowest terms");
  return {p, n};
}

void emit(const json& j, bool as_json) {
  if (as_json) std::cout << j.dump(2) << "\n";
}

struct AlphaOpt {
  std::string text;
  long long p = 0;
  long long n = 0;
  void resolve() { std::tie(p, n) = parse_alpha(text); }
};

int run_count(const AlphaOpt& a, long long r, long long length, bool states,
              bool as_json) {
  const words::BalanceSpec spec(a.p, a.n, r);
  const words::CountVector cv = words::count_balanced_dp(length, spec);
  const mpz_class total = cv.total();
  const mpz_class loose = words::count_unconstrained(length, spec);
  if (as_json) {
    json j;
    j["alpha"] = a.text;
    j["r"] = r;
    j["length"] = length;
    j["balanced"] = total.get_str();
    j["final_window_only"] = loose.get_str();
    if (states) {
      json st = json::object();
      for (long long d = spec.window_lo(); d <= spec.window_hi(); ++d)
        st[std::to_string(d)] = cv.at_deviation(d).get_str();
      j["by_final_deviation"] = st;
    }
    emit(j, true);
  } else {
    std::printf("alpha %s  r %lld  length %lld\n", a.text.c_str(), r, length);
    std::printf("balanced          %s\n", total.get_str().c_str());
    std::printf("final window only %s\n", loose.get_str().c_str());
    if (states)
      for (long long d = spec.window_lo(); d <= spec.window_hi(); ++d)
        std::printf("  deviation %+lld  %s\n", d,
                    cv.at_deviation(d).get_str().c_str());
  }
  return total <= loose ? 0 : 1;
}

int run_growth(const AlphaOpt& a, long long r, bool as_json) {
  const transfer::GrowthEstimate g = transfer::growth_exponent(a.p, a.n, r);
  if (as_json) {
    json j;
    j["alpha"] = a.text;
    j["r"] = r;
    j["e"] = g.e;
    j["perron"] = g.perron;
    j["entropy_limit"] = g.entropy_limit;
    j["ceiling"] = g.ceiling;
    j["converged"] = g.converged;
    j["lossy_conversion"] = g.lossy_conversion;
    emit(j, true);
  } else {
    std::printf("alpha %s  r %lld\n", a.text.c_str(), r);
    std::printf("e             %s\n", fmt(g.e).c_str());
    std::printf("perron        %s\n", fmt(g.perron).c_str());
    std::printf("entropy limit %s\n", fmt(g.entropy_limit).c_str());
    std::printf("converged     %s\n", g.converged ? "yes" : "no");
  }
  return (g.converged && g.e < g.entropy_limit) ? 0 : 1;
}

int run_spectrum(const AlphaOpt& a, long long r,
                 const std::vector<double>& interval, long long grid_points,
                 bool as_json, bool as_csv) {
  const transfer::TransferMatrix m = transfer::build_M(a.p, a.n, r);
  const transfer::SpectrumReport rep = transfer::full_spectrum(m);

  bool agree = true;
  long long inside = -1, flips = -1;
  if (interval.size() == 2) {
    const double lo = interval[0], hi = interval[1];
    inside = transfer::count_spectrum_in(a.p, a.n, r, lo, hi);
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(grid_points));
    for (long long i = 0; i < grid_points; ++i)
      grid.push_back(lo + (hi - lo) * (static_cast<double>(i) + 0.5) /
                              static_cast<double>(grid_points));
    flips = transfer::oscillation_scan(m, grid).sign_changes;
    agree = inside == flips;
  }

  if (as_csv) {
    std::printf("# alpha %s r %lld dim %lld\n", a.text.c_str(), r, rep.dim);
    std::printf("# re,im,residual\n");
    for (const auto& ep : rep.pairs)
      std::printf("%s,%s,%s\n", fmt(ep.value.real()).c_str(),
                  fmt(ep.value.imag()).c_str(), fmt(ep.residual).c_str());
  } else if (as_json) {
    json j;
    j["alpha"] = a.text;
    j["r"] = r;
    j["dim"] = rep.dim;
    j["all_real"] = rep.all_real;
    j["all_positive"] = rep.all_positive;
    j["all_simple"] = rep.all_simple;
    j["residuals_ok"] = rep.residuals_ok;
    j["perron"] = rep.perron;
    json eig = json::array();
    for (const auto& ep : rep.pairs)
      eig.push_back({{"im", ep.value.imag()},
                     {"re", ep.value.real()},
                     {"residual", ep.residual}});
    j["eigenvalues"] = eig;
    if (inside >= 0) {
      j["interval"] = {interval[0], interval[1]};
      j["count_in_interval"] = inside;
      j["oscillation_changes"] = flips;
      j["routes_agree"] = agree;
    }
    emit(j, true);
  } else {
    std::printf("alpha %s  r %lld  dim %lld\n", a.text.c_str(), r, rep.dim);
    std::printf("real %s  positive %s  simple %s  residuals %s\n",
                rep.all_real ? "yes" : "no", rep.all_positive ? "yes" : "no",
                rep.all_simple ? "yes" : "no", rep.residuals_ok ? "yes" : "no");
    std::printf("perron %s\n", fmt(rep.perron).c_str());
    if (inside >= 0) {
      std::printf("eigenvalues in (%s, %s): %lld\n", fmt(interval[0]).c_str(),
                  fmt(interval[1]).c_str(), inside);
      std::printf("oscillation sign changes: %lld (%s)\n", flips,
                  agree ? "agree" : "DISAGREE");
    }
  }
  const bool ok = rep.all_real && rep.all_positive && rep.all_simple &&
                  rep.residuals_ok && agree;
  return ok ? 0 : 1;
}

int run_poly(int n, int p, double lambda, bool as_json) {
  const poly::PolyInstance inst(n, p, lambda);
  const poly::RootSet rs = poly::roots(inst);
  const poly::CriticalData cd = poly::critical_data(n, p);
  const poly::CriticalSearch ds = poly::detect_critical(n, p);
  const double crit_err =
      std::fabs(ds.lambda - cd.lambda_crit) / cd.lambda_crit;
  const poly::PairingReport pr = poly::modulus_pairing_check(inst);

  bool ordering_ok = true;
  bool ordering_ran = false;
  if (std::gcd(n, p) == 1 && lambda > 0 && lambda < cd.lambda_crit) {
    const poly::OrderingReport orep =
        poly::modulus_ordering(poly::labeled_roots(n, p, lambda));
    ordering_ok = orep.ok;
    ordering_ran = true;
  }

  if (as_json) {
    json j;
    j["n"] = n;
    j["p"] = p;
    j["lambda"] = lambda;
    json roots = json::array();
    for (size_t k = 0; k < rs.roots.size(); ++k)
      roots.push_back({{"im", rs.roots[k].imag()},
                       {"re", rs.roots[k].real()},
                       {"residual", rs.residuals[k]}});
    j["roots"] = roots;
    j["min_separation"] = rs.min_separation;
    j["lambda_crit"] = cd.lambda_crit;
    j["lambda_crit_detected"] = ds.lambda;
    j["double_root"] = cd.double_root;
    j["double_root_detected"] = ds.x;
    j["pairing_ok"] = pr.ok;
    if (ordering_ran) j["ordering_ok"] = ordering_ok;
    emit(j, true);
  } else {
    std::printf("P(x) = (x+1)^%d - %s x^%d\n", n, fmt(lambda).c_str(), p);
    for (size_t k = 0; k < rs.roots.size(); ++k)
      std::printf("  root %2zu  %s %+si  |x| %s\n", k,
                  fmt(rs.roots[k].real()).c_str(),
                  fmt(rs.roots[k].imag()).c_str(),
                  fmt(std::abs(rs.roots[k])).c_str());
    std::printf("critical lambda %s (detected %s)\n", fmt(cd.lambda_crit).c_str(),
                fmt(ds.lambda).c_str());
    std::printf("double root     %s (detected %s)\n", fmt(cd.double_root).c_str(),
                fmt(ds.x).c_str());
    std::printf("modulus pairing %s\n", pr.ok ? "ok" : "VIOLATED");
    if (ordering_ran)
      std::printf("modulus order   %s\n", ordering_ok ? "ok" : "MISMATCH");
  }
  const bool ok = pr.ok && ordering_ok && ds.converged && crit_err < 1e-8;
  return ok ? 0 : 1;
}

int run_galois(int n, int p, bool as_json) {
  const monodromy::GaloisReport rep = monodromy::galois_classify(n, p);
  if (as_json) {
    json j;
    j["n"] = n;
    j["p"] = p;
    j["gcd"] = rep.t;
    j["sigma_zero"] = rep.sigma_zero.cycle_string();
    j["sigma_crit"] = rep.sigma_crit.cycle_string();
    j["order"] = rep.group.order.get_str();
    j["expected_order"] = rep.expected_order.get_str();
    j["symmetric"] = rep.group.is_symmetric;
    j["blocks"] = rep.group.blocks;
    j["order_matches"] = rep.order_matches;
    j["structure_matches"] = rep.structure_matches;
    emit(j, true);
  } else {
    std::printf("(x+1)^%d - lambda x^%d, gcd %d\n", n, p, rep.t);
    std::printf("loop around 0:        %s\n", rep.sigma_zero.cycle_string().c_str());
    std::printf("loop around critical: %s\n", rep.sigma_crit.cycle_string().c_str());
    std::printf("group order %s (expected %s)\n", rep.group.order.get_str().c_str(),
                rep.expected_order.get_str().c_str());
    std::printf("structure   %s\n", rep.structure_matches ? "matches" : "MISMATCH");
  }
  return (rep.order_matches && rep.structure_matches) ? 0 : 1;
}

int run_asympt(long long r, long long s, bool as_json) {
  const asympt::AsymptoticEstimate est = asympt::pemantle_estimate({r, s});
  if (as_json) {
    json j;
    j["r"] = r;
    j["s"] = s;
    j["estimate_log"] = est.log_f;
    j["estimate"] = est.f;
    j["exact"] = est.exact.get_str();
    j["rel_error"] = est.rel_error;
    emit(j, true);
  } else {
    std::printf("direction (%lld, %lld)\n", r, s);
    std::printf("estimate  %s  (log %s)\n", fmt(est.f).c_str(),
                fmt(est.log_f).c_str());
    std::printf("exact     %s\n", est.exact.get_str().c_str());
    std::printf("rel error %s\n", fmt(est.rel_error).c_str());
  }
  return est.rel_error < 1.0 ? 0 : 1;
}

int run_graph(const std::string& file, const AlphaOpt& a, long long r,
              long long length, const std::vector<long long>& ladder,
              bool as_json, bool as_csv) {
  const graphwords::TwoColoredGraph g =
      file.empty() ? graphwords::TwoColoredGraph::single_vertex()
                   : graphwords::TwoColoredGraph::load(file);
  const graphwords::GraphGrowth gg = graphwords::graph_growth(g, a.p, a.n, r);

  mpz_class count = -1;
  if (length >= 0)
    count = graphwords::count_balanced_paths(g, length, a.p, a.n, r).total();

  graphwords::ConjectureTable tab;
  if (!ladder.empty()) tab = graphwords::conjecture_scan(g, a.p, a.n, ladder);

  if (as_csv) {
    std::printf("# graph %s alpha %s\n", file.empty() ? "(single vertex)" : file.c_str(),
                a.text.c_str());
    std::printf("# r,e\n");
    if (ladder.empty())
      std::printf("%lld,%s\n", r, fmt(gg.e).c_str());
    else
      for (const auto& row : tab.rows)
        std::printf("%lld,%s\n", row.r, fmt(row.e).c_str());
    if (!ladder.empty()) std::printf("# e_tilde,%s\n", fmt(tab.e_tilde).c_str());
  } else if (as_json) {
    json j;
    j["graph"] = file.empty() ? "(single vertex)" : file;
    j["alpha"] = a.text;
    j["r"] = r;
    j["e"] = gg.e;
    j["perron"] = gg.perron;
    j["irreducible"] = gg.irreducible;
    j["converged"] = gg.converged;
    if (count >= 0) {
      j["length"] = length;
      j["balanced_paths"] = count.get_str();
    }
    if (!ladder.empty()) {
      json rows = json::array();
      for (const auto& row : tab.rows) rows.push_back({{"e", row.e}, {"r", row.r}});
      j["ladder"] = rows;
      j["e_tilde"] = tab.e_tilde;
      j["horizon"] = tab.horizon;
    }
    emit(j, true);
  } else {
    std::printf("graph %s  alpha %s  r %lld\n",
                file.empty() ? "(single vertex)" : file.c_str(), a.text.c_str(), r);
    std::printf("e %s  perron %s  irreducible %s\n", fmt(gg.e).c_str(),
                fmt(gg.perron).c_str(), gg.irreducible ? "yes" : "no");
    if (count >= 0)
      std::printf("balanced paths of length %lld: %s\n", length,
                  count.get_str().c_str());
    for (const auto& row : tab.rows)
      std::printf("  r %3lld  e %s\n", row.r, fmt(row.e).c_str());
    if (!ladder.empty())
      std::printf("  end-constrained e_tilde %s (length %lld)\n",
                  fmt(tab.e_tilde).c_str(), tab.horizon);
  }
  return gg.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced binary words: exact counts, transfer-matrix spectra, "
               "growth exponents, parameter-family monodromy, and colored-graph "
               "path counting"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // lets --json trail a subcommand

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  AlphaOpt alpha;
  long long r = 1, length = 0, s = 1;
  int n = 2, p = 1;
  double lambda = 1.0;
  bool states = false, as_csv = false;
  std::vector<double> interval;
  long long grid_points = 2000;
  std::string file;
  std::vector<long long> ladder;

  auto* count = app.add_subcommand("count", "exact balanced-word counts");
  count->add_option("--alpha", alpha.text, "density p/n, lowest terms")->required();
  count->add_option("--r", r, "window half-width")->required();
  count->add_option("--length", length, "word length")->required();
  count->add_flag("--states", states, "break counts down by final deviation");

  auto* growth = app.add_subcommand("growth", "growth exponent via the period matrix");
  growth->add_option("--alpha", alpha.text)->required();
  growth->add_option("--r", r)->required();

  auto* spectrum = app.add_subcommand("spectrum", "full period-matrix spectrum");
  spectrum->add_option("--alpha", alpha.text)->required();
  spectrum->add_option("--r", r)->required();
  spectrum->add_option("--interval", interval, "count eigenvalues in (lo, hi)")
      ->expected(2);
  spectrum->add_option("--grid", grid_points, "oscillation grid size");
  spectrum->add_flag("--csv", as_csv, "eigenvalues as CSV rows");

  auto* polyc = app.add_subcommand("poly", "roots and critical data of (x+1)^n - lambda x^p");
  polyc->add_option("--n", n)->required();
  polyc->add_option("--p", p)->required();
  polyc->add_option("--lambda", lambda)->required();

  auto* galois = app.add_subcommand("galois", "monodromy group of the root family");
  galois->add_option("--n", n)->required();
  galois->add_option("--p", p)->required();

  auto* asymptc = app.add_subcommand("asympt", "saddle-point estimate vs exact binomial");
  asymptc->add_option("--r", r)->required();
  asymptc->add_option("--s", s)->required();

  auto* graph = app.add_subcommand("graph", "balanced paths in a two-colored graph");
  graph->add_option("--file", file, "graph description file (default: single vertex)");
  graph->add_option("--alpha", alpha.text)->required();
  graph->add_option("--r", r)->required();
  graph->add_option("--length", length, "count paths of this length")
      ->default_val(-1);
  graph->add_option("--ladder", ladder, "window ladder for the growth table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed() || growth->parsed() || spectrum->parsed() ||
        graph->parsed())
      alpha.resolve();
    if (count->parsed()) return run_count(alpha, r, length, states, as_json);
    if (growth->parsed()) return run_growth(alpha, r, as_json);
    if (spectrum->parsed())
      return run_spectrum(alpha, r, interval, grid_points, as_json, as_csv);
    if (polyc->parsed()) return run_poly(n, p, lambda, as_json);
    if (galois->parsed()) return run_galois(n, p, as_json);
    if (asymptc->parsed()) return run_asympt(r, s, as_json);
    if (graph->parsed())
      return run_graph(file, alpha, r, length, ladder, as_json, as_csv);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 0;
}
