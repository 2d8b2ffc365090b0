// Command-line front end: batch, machine-readable, reproducible. Every
// stochastic output row echoes the seed and trial count that produced it,
// and results are byte-identical for any --workers value.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relcube/relcube.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace relcube;

struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buffer;

  void flush() {
    if (path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file " + path);
      f << buffer.str();
    }
  }
};

std::string fmt(double x, const char* spec = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

Graph parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec must be q:<n>, q3:<n>, p3:<n> or file:<path>");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "file") {
    std::ifstream f(rest);
    if (!f) throw std::invalid_argument("cannot open graph file " + rest);
    return Graph::from_text(f);
  }
  int n = std::stoi(rest);
  if (kind == "q") return build(ProductSpec{BaseKind::k2, n});
  if (kind == "q3") return build(ProductSpec{BaseKind::k3, n});
  if (kind == "p3") return build(ProductSpec{BaseKind::p3, n});
  throw std::invalid_argument("unknown graph family '" + kind + "'");
}

json bigint_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::int64_t{1} << 53)) return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

// ---------------------------------------------------------------- iso ----

int run_iso(int base, int n, bool oracle, int workers, Output& out) {
  (void)workers;
  IsoProfile profile = iso_profile(base, n);
  Graph g;
  if (oracle) g = build(ProductSpec{base == 2 ? BaseKind::k2 : BaseKind::k3, n});
  out.buffer << "m,e_max,b_min" << (oracle ? ",oracle_e_max" : "") << "\n";
  for (const auto& e : profile.entries) {
    out.buffer << e.m << ',' << e.e_max << ',' << e.b_min;
    if (oracle) out.buffer << ',' << oracle_max_induced_edges(g, static_cast<int>(e.m));
    out.buffer << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- perc ----

std::vector<double> parse_sweep(const std::string& sweep) {
  double a, b, step;
  char c1, c2;
  std::istringstream in(sweep);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':')
    throw std::invalid_argument("--sweep expects a:b:step");
  if (step <= 0) throw std::invalid_argument("--sweep step must be positive");
  std::vector<double> ps;
  for (double p = a; p <= b + 1e-12; p += step) ps.push_back(p);
  if (ps.empty()) throw std::invalid_argument("--sweep range is empty");
  return ps;
}

int run_perc(const std::string& family, int n, std::vector<double> ps, long trials,
             std::uint64_t seed, const std::string& stat, int r_max, int workers, Output& out) {
  out.buffer << "family,n,p,stat,estimate,stderr,trials,seed\n";
  Graph g;
  if (family == "q") g = build(ProductSpec{BaseKind::k2, n});
  else if (family == "q3") g = build(ProductSpec{BaseKind::k3, n});
  else if (family == "p3") g = build(ProductSpec{BaseKind::p3, n});
  else if (family != "gnm") throw std::invalid_argument("--family must be q, q3, p3 or gnm");

  auto emit = [&](double p, const std::string& stat_name, double est, double se) {
    out.buffer << family << ',' << n << ',' << fmt(p, "%.6g") << ',' << stat_name << ','
               << fmt(est) << ',' << fmt(se) << ',' << trials << ',' << seed << "\n";
  };
  for (double p : ps) {
    if (family == "gnm") {
      if (stat != "conn")
        throw std::invalid_argument("family gnm supports only --stat conn");
      std::int64_t vertices = std::int64_t{1} << n;
      std::int64_t edges = static_cast<std::int64_t>(n) * (std::int64_t{1} << (n - 1));
      auto est = estimate_gnm_connectivity(static_cast<int>(vertices), edges, p, trials, seed,
                                           workers);
      emit(p, "conn", est.estimate, est.stderr_of_mean);
    } else if (stat == "conn") {
      auto est = estimate_connectivity(g, p, trials, seed, workers);
      emit(p, "conn", est.estimate, est.stderr_of_mean);
    } else if (stat == "noiso") {
      auto est = estimate_no_isolated(g, p, trials, seed, workers);
      emit(p, "noiso", est.estimate, est.stderr_of_mean);
    } else if (stat == "middle") {
      auto est = middle_component_probability(g, p, trials, seed, workers);
      emit(p, "middle", est.estimate, est.stderr_of_mean);
    } else if (stat == "moments") {
      auto est = empirical_factorial_moments(g, p, trials, r_max, seed, workers);
      for (int r = 0; r <= r_max; ++r)
        emit(p, "moment" + std::to_string(r), est.value[r], est.stderr_of_mean[r]);
    } else {
      throw std::invalid_argument("--stat must be conn, noiso, middle or moments");
    }
  }
  return 0;
}

// ---------------------------------------------------------------- rel ----

int run_rel(const std::string& spec, double p, bool has_p, bool as_json, int cap, int workers,
            Output& out) {
  Graph g = parse_graph_spec(spec);
  ReliabilityCoefficients c = reliability_coefficients(g, cap, workers);
  ReliabilityCrossCheck check = cross_check(g, c);
  if (as_json) {
    json j;
    j["n"] = c.n;
    j["m"] = c.m;
    j["s"] = json::array();
    for (const auto& x : c.s) j["s"].push_back(bigint_json(x));
    j["checks"] = {{"spanning_trees", bigint_json(check.spanning_trees)},
                   {"bridges", check.bridges},
                   {"trees_ok", check.trees_ok},
                   {"cuts_ok", check.cuts_ok},
                   {"top_ok", check.top_ok}};
    if (has_p) {
      j["p"] = p;
      j["reliability"] = evaluate(c, p);
    }
    out.buffer << j.dump(2) << "\n";
  } else {
    out.buffer << "n " << c.n << "\nm " << c.m << "\ns";
    for (const auto& x : c.s) out.buffer << ' ' << x;
    out.buffer << "\nspanning_trees " << check.spanning_trees << (check.trees_ok ? " ok" : " MISMATCH")
               << "\nbridges " << check.bridges << (check.cuts_ok ? " ok" : " MISMATCH")
               << "\ntop " << (check.top_ok ? "ok" : "MISMATCH") << "\n";
    if (has_p)
      out.buffer << "reliability(" << fmt(p, "%.6g") << ") " << fmt(evaluate(c, p), "%.12g")
                 << "\n";
  }
  if (!check.all_ok()) {
    std::cerr << "error: reliability cross-check failed (enumeration bug)\n";
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------- uor ----

json uor_row_json(int n, int m, const std::vector<BigInt>& s, std::uint64_t cls) {
  json j;
  j["s"] = json::array();
  for (const auto& x : s) j["s"].push_back(bigint_json(x));
  Graph g = mask_to_graph(n, cls);
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back(json::array({u, v}));
  (void)m;
  return j;
}

int run_uor(int n, int m, const std::string& emit_dir, int workers, Output& out) {
  UorReport rep = find_uor(n, m, workers);
  json j;
  j["n"] = n;
  j["m"] = m;
  j["class_count"] = rep.catalog.classes.size();
  j["uor_exists"] = rep.uor_exists;
  j["best"] = uor_row_json(n, m, rep.best, rep.best_class);
  if (!rep.uor_exists) {
    j["rival"] = uor_row_json(n, m, rep.rival, rep.rival_class);
    j["crossover_points"] = json::array();
    for (double r : rep.crossover_points) j["crossover_points"].push_back(std::stod(fmt(r, "%.12g")));
  }
  out.buffer << j.dump(2) << "\n";
  if (!emit_dir.empty()) {
    for (std::size_t i = 0; i < rep.catalog.classes.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "/class_%04zu.txt", i);
      std::ofstream f(emit_dir + name);
      if (!f) throw std::runtime_error("cannot write class file in " + emit_dir);
      rep.catalog.representative(i).write_text(f);
    }
  }
  return 0;
}

// Coefficient rows as printed in reliability tables: s_{m-1} down to s_{n-1}.
void emit_table_row(Output& out, int n, int m, const char* label, const std::vector<BigInt>& s) {
  out.buffer << m << ',' << label;
  for (int k = m - 1; k >= n - 1; --k) out.buffer << ',' << s[k];
  out.buffer << "\n";
}

int run_uor_table(int n, bool full, int workers, Output& out) {
  out.buffer << "m,label,coefficients_high_to_low\n";
  int m_max = n * (n - 1) / 2;
  if (n >= 7 && !full) m_max = 16;  // the expensive tail hides behind --full
  for (int m = n; m <= m_max; ++m) {
    UorReport rep = find_uor(n, m, workers);
    if (rep.uor_exists) {
      emit_table_row(out, n, m, "uor", rep.best);
    } else {
      emit_table_row(out, n, m, "a", rep.best);
      emit_table_row(out, n, m, "b", rep.rival);
    }
  }
  return 0;
}

// ------------------------------------------------------------- access ----

int run_access(const std::string& spec, long trials, std::uint64_t seed, int start_vertex,
               bool weighted, int j, int workers, Output& out) {
  Graph g = parse_graph_spec(spec);
  StartPolicy policy = weighted ? StartPolicy::weighted() : StartPolicy::at(start_vertex);
  out.buffer << "# graph=" << spec << " trials=" << trials << " seed=" << seed
             << " policy=" << (weighted ? "degree-weighted" : "fixed:" + std::to_string(policy.vertex))
             << "\n";
  out.buffer << "j,mean,variance\n";
  if (j > 0) {
    auto est = estimate_accessibility(g, j, policy, trials, seed, workers);
    out.buffer << est.j << ',' << fmt(est.mean) << ',' << fmt(est.variance) << "\n";
  } else {
    for (const auto& est : accessibility_profile(g, policy, trials, seed, workers))
      out.buffer << est.j << ',' << fmt(est.mean) << ',' << fmt(est.variance) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"percolation, exact reliability and isoperimetry of product graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  int workers = 0;
  std::string out_path;
  app.add_option("--workers", workers, "cap worker threads (default: RELCUBE_WORKERS or hardware)");
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  // iso
  auto* iso = app.add_subcommand("iso", "exact isoperimetric profile of the binary/ternary cube");
  int iso_base = 2, iso_n = 1;
  bool iso_oracle = false;
  iso->add_option("--base", iso_base, "2 or 3")->required();
  iso->add_option("--n", iso_n, "exponent")->required();
  iso->add_flag("--oracle", iso_oracle, "also run the exhaustive subset oracle");

  // perc
  auto* perc = app.add_subcommand("perc", "Monte Carlo percolation estimates");
  std::string perc_family, perc_stat = "conn", perc_sweep;
  int perc_n = 1, perc_rmax = 2;
  double perc_p = -1;
  long perc_trials = 10000;
  std::uint64_t perc_seed = 1;
  perc->add_option("--family", perc_family, "q | q3 | p3 | gnm")->required();
  perc->add_option("--n", perc_n, "exponent")->required();
  perc->add_option("--p", perc_p, "percolation parameter");
  perc->add_option("--sweep", perc_sweep, "a:b:step range of p values");
  perc->add_option("--trials", perc_trials, "Monte Carlo trials")->required();
  perc->add_option("--seed", perc_seed, "RNG seed")->required();
  perc->add_option("--stat", perc_stat, "conn | noiso | middle | moments");
  perc->add_option("--r-max", perc_rmax, "largest factorial-moment order (<= 4)");

  // rel
  auto* rel = app.add_subcommand("rel", "exact all-terminal reliability coefficients");
  std::string rel_graph;
  double rel_p = -1;
  bool rel_json = false;
  int rel_cap = kDefaultReliabilityCap;
  rel->add_option("--graph", rel_graph, "q:<n> | q3:<n> | p3:<n> | file:<path>")->required();
  rel->add_option("--p", rel_p, "evaluate the reliability polynomial at p");
  rel->add_flag("--json", rel_json, "emit JSON");
  rel->add_option("--cap", rel_cap, "edge-count cap for the 2^m enumeration");

  // uor
  auto* uor = app.add_subcommand("uor", "uniformly-optimal-reliability verdict for G(n,m)");
  int uor_n = 0, uor_m = 0;
  std::string uor_emit;
  uor->add_option("--n", uor_n, "vertices (<= 8)")->required();
  uor->add_option("--m", uor_m, "edges")->required();
  uor->add_option("--emit-classes", uor_emit, "write every class representative to this directory");

  // uor-table
  auto* table = app.add_subcommand("uor-table", "best reliability rows for every m at fixed n");
  int table_n = 0;
  bool table_full = false;
  table->add_option("--n", table_n, "vertices (<= 8)")->required();
  table->add_flag("--full", table_full, "include m >= 17 rows for n >= 7");

  // access
  auto* access = app.add_subcommand("access", "random-walk accessibility statistics");
  std::string access_graph;
  long access_trials = 10000;
  std::uint64_t access_seed = 1;
  int access_start = 0, access_j = 0;
  bool access_weighted = false;
  access->add_option("--graph", access_graph, "q:<n> | q3:<n> | p3:<n> | file:<path>")->required();
  access->add_option("--trials", access_trials, "walks")->required();
  access->add_option("--seed", access_seed, "RNG seed")->required();
  access->add_option("--start", access_start, "fixed start vertex (default 0)");
  access->add_flag("--weighted", access_weighted, "draw the start vertex with probability deg/2m");
  access->add_option("--j", access_j, "single milestone (default: full profile)");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.path = out_path;
  try {
    int rc = 1;
    if (*iso) {
      rc = run_iso(iso_base, iso_n, iso_oracle, workers, out);
    } else if (*perc) {
      std::vector<double> ps;
      if (!perc_sweep.empty())
        ps = parse_sweep(perc_sweep);
      else if (perc_p >= 0)
        ps.push_back(perc_p);
      else
        throw std::invalid_argument("perc needs --p or --sweep");
      rc = run_perc(perc_family, perc_n, ps, perc_trials, perc_seed, perc_stat, perc_rmax,
                    workers, out);
    } else if (*rel) {
      rc = run_rel(rel_graph, rel_p, rel_p >= 0, rel_json, rel_cap, workers, out);
    } else if (*uor) {
      rc = run_uor(uor_n, uor_m, uor_emit, workers, out);
    } else if (*table) {
      rc = run_uor_table(table_n, table_full, workers, out);
    } else if (*access) {
      rc = run_access(access_graph, access_trials, access_seed, access_start, access_weighted,
                      access_j, workers, out);
    }
    out.flush();
    return rc;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
