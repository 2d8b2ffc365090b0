#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "relcube/graph.hpp"
#include "relcube/parallel.hpp"
#include "relcube/product_family.hpp"
#include "relcube/rng.hpp"

namespace relcube {

// Monte Carlo estimate of a Bernoulli (or counting) statistic under edge
// percolation. Identical (graph, p, seed, trials) always reproduce the same
// numbers, for any worker count.
struct PercolationEstimate {
  std::string statistic;
  double estimate = 0;
  double stderr_of_mean = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::string family;
  int n = 0;
  double p = 0;
};

struct IsolatedMoments {
  std::string family;
  int n = 0;
  double p = 0;
  double mean = 0;
  double variance = 0;
  double lambda = 0;  // Poisson rate the isolated-vertex count approximates
};

inline double critical_value(BaseKind family) {
  switch (family) {
    case BaseKind::k2:
      return 0.5;
    case BaseKind::k3:
      return (std::sqrt(3.0) - 1.0) / std::sqrt(3.0);
    case BaseKind::p3:
      return 2.0 - std::sqrt(2.0);
    default:
      throw std::invalid_argument("critical_value: no known threshold for this family");
  }
}

namespace detail {

// Union-find scratch reused across trials within one worker.
struct UnionFind {
  std::vector<int> parent, size;

  void reset(int n) {
    parent.resize(n);
    size.assign(n, 1);
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true when the edge merged two components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

struct TrialOutcome {
  bool connected;
  bool has_isolated;
  bool has_middle_component;  // some component of size in [2, n/2]
  int isolated;
};

struct EdgeArrays {
  std::vector<int> u, v;
  int n = 0;

  explicit EdgeArrays(const Graph& g) : n(g.vertex_count()) {
    u.reserve(g.edge_count());
    v.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) {
      u.push_back(a);
      v.push_back(b);
    }
  }
};

struct TrialScratch {
  UnionFind uf;
  std::vector<char> touched;
};

inline TrialOutcome percolate_once(const EdgeArrays& e, double p, SplitMix64& rng,
                                   TrialScratch& scratch) {
  int n = e.n;
  scratch.uf.reset(n);
  scratch.touched.assign(n, 0);
  int components = n;
  std::size_t m = e.u.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (rng.next_unit() < p) {
      scratch.touched[e.u[i]] = 1;
      scratch.touched[e.v[i]] = 1;
      if (scratch.uf.unite(e.u[i], e.v[i])) --components;
    }
  }
  int isolated = 0;
  for (int v = 0; v < n; ++v) isolated += scratch.touched[v] == 0;
  bool connected = components == 1;
  // Middle component: neither an isolated vertex nor a giant, i.e. a
  // component of size 2..n/2. (If anything of size in (n/2, n) existed, the
  // rest of the graph would contain one of these or be all isolated.)
  bool middle = false;
  for (int v = 0; v < n && !middle; ++v)
    if (scratch.uf.parent[v] == v && scratch.uf.size[v] >= 2 && 2 * scratch.uf.size[v] <= n)
      middle = true;
  return {connected, isolated > 0, middle, isolated};
}

inline double bernoulli_stderr(double phat, long trials) {
  return std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
}

template <typename PerTrial>
std::uint64_t count_trials(const EdgeArrays& e, double p, long trials, std::uint64_t seed,
                           int workers, PerTrial&& pred) {
  auto chunks = parallel_accumulate<std::uint64_t>(
      static_cast<std::uint64_t>(trials), workers, 0,
      [&](std::uint64_t& acc, std::uint64_t begin, std::uint64_t end) {
        TrialScratch scratch;
        for (std::uint64_t t = begin; t < end; ++t) {
          SplitMix64 rng = trial_rng(seed, t);
          if (pred(percolate_once(e, p, rng, scratch))) ++acc;
        }
      });
  std::uint64_t total = 0;
  for (auto c : chunks) total += c;
  return total;
}

}  // namespace detail

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("percolation: p must lie in [0,1]");
}

// Random subgraph keeping each edge independently with probability p.
inline Graph sample_subgraph(const Graph& g, double p, std::uint64_t seed) {
  check_probability(p);
  SplitMix64 rng = trial_rng(seed, 0);
  std::vector<Graph::Edge> kept;
  for (const auto& edge : g.edges())
    if (rng.next_unit() < p) kept.push_back(edge);
  return Graph(g.vertex_count(), std::move(kept));
}

inline PercolationEstimate estimate_connectivity(const Graph& g, double p, long trials,
                                                 std::uint64_t seed, int workers = 0) {
  check_probability(p);
  if (trials < 1) throw std::invalid_argument("estimate_connectivity: trials must be >= 1");
  detail::EdgeArrays e(g);
  std::uint64_t hits = detail::count_trials(e, p, trials, seed, workers,
                                            [](const detail::TrialOutcome& o) { return o.connected; });
  double phat = static_cast<double>(hits) / static_cast<double>(trials);
  return {"conn", phat, detail::bernoulli_stderr(phat, trials), trials, seed, "", g.vertex_count(), p};
}

inline PercolationEstimate estimate_no_isolated(const Graph& g, double p, long trials,
                                                std::uint64_t seed, int workers = 0) {
  check_probability(p);
  if (trials < 1) throw std::invalid_argument("estimate_no_isolated: trials must be >= 1");
  detail::EdgeArrays e(g);
  std::uint64_t hits = detail::count_trials(
      e, p, trials, seed, workers,
      [](const detail::TrialOutcome& o) { return !o.has_isolated; });
  double phat = static_cast<double>(hits) / static_cast<double>(trials);
  return {"noiso", phat, detail::bernoulli_stderr(phat, trials), trials, seed, "", g.vertex_count(), p};
}

// Fraction of samples containing a middle-sized component: one of size
// 2..|V|/2, so neither an isolated vertex nor the giant piece. (This is the
// event the threshold theorems bound; with a component of any size strictly
// inside (1,|V|) the complement holds one of these or consists of isolated
// vertices only.)
inline PercolationEstimate middle_component_probability(const Graph& g, double p, long trials,
                                                        std::uint64_t seed, int workers = 0) {
  check_probability(p);
  if (trials < 1) throw std::invalid_argument("middle_component_probability: trials must be >= 1");
  detail::EdgeArrays e(g);
  std::uint64_t hits = detail::count_trials(
      e, p, trials, seed, workers,
      [](const detail::TrialOutcome& o) { return o.has_middle_component; });
  double phat = static_cast<double>(hits) / static_cast<double>(trials);
  return {"middle", phat, detail::bernoulli_stderr(phat, trials), trials, seed, "", g.vertex_count(), p};
}

// Paired result: estimate and its standard error per factorial moment order.
struct FactorialMomentEstimates {
  std::vector<double> value;   // E_r for r = 0..r_max
  std::vector<double> stderr_of_mean;
  long trials = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo factorial moments E_r[X] = E[X(X-1)...(X-r+1)] of the
// isolated-vertex count, r <= 4. Per-trial values are integers, so the sums
// are exact and worker-count independent.
inline FactorialMomentEstimates empirical_factorial_moments(const Graph& g, double p, long trials,
                                                            int r_max, std::uint64_t seed,
                                                            int workers = 0) {
  check_probability(p);
  if (trials < 1) throw std::invalid_argument("empirical_factorial_moments: trials must be >= 1");
  if (r_max < 0 || r_max > 4)
    throw std::invalid_argument("empirical_factorial_moments: r_max must lie in 0..4");
  detail::EdgeArrays e(g);
  struct Sums {
    unsigned __int128 s[5] = {0, 0, 0, 0, 0};
    unsigned __int128 sq[5] = {0, 0, 0, 0, 0};
  };
  auto chunks = parallel_accumulate<Sums>(
      static_cast<std::uint64_t>(trials), workers, Sums{},
      [&](Sums& acc, std::uint64_t begin, std::uint64_t end) {
        detail::TrialScratch scratch;
        for (std::uint64_t t = begin; t < end; ++t) {
          SplitMix64 rng = trial_rng(seed, t);
          auto out = detail::percolate_once(e, p, rng, scratch);
          unsigned __int128 falling = 1;
          for (int r = 0; r <= r_max; ++r) {
            if (r > 0) {
              long long factor = static_cast<long long>(out.isolated) - (r - 1);
              falling = factor > 0 ? falling * static_cast<unsigned __int128>(factor) : 0;
            }
            acc.s[r] += falling;
            acc.sq[r] += falling * falling;
          }
        }
      });
  Sums total;
  for (const auto& c : chunks)
    for (int r = 0; r <= r_max; ++r) {
      total.s[r] += c.s[r];
      total.sq[r] += c.sq[r];
    }
  FactorialMomentEstimates out;
  out.trials = trials;
  out.seed = seed;
  double t = static_cast<double>(trials);
  for (int r = 0; r <= r_max; ++r) {
    double mean = static_cast<double>(total.s[r]) / t;
    double var = (static_cast<double>(total.sq[r]) / t) - mean * mean;
    if (var < 0) var = 0;
    out.value.push_back(mean);
    out.stderr_of_mean.push_back(std::sqrt(var / t));
  }
  return out;
}

// Closed-form mean and variance of the isolated-vertex count.
inline IsolatedMoments isolated_moments_theoretical(BaseKind family, int n, double p) {
  check_probability(p);
  if (n < 1) throw std::invalid_argument("isolated_moments_theoretical: n must be >= 1");
  double q = 1.0 - p;
  IsolatedMoments out{family_name(family), n, p, 0, 0, 0};
  switch (family) {
    case BaseKind::k2: {
      out.mean = std::pow(2.0 * q, n);
      double tail = q > 0 ? std::pow(q, n) * (n * p / q - 1.0) : 0.0;
      out.variance = out.mean + out.mean * tail;
      break;
    }
    case BaseKind::k3: {
      out.mean = std::pow(3.0 * q * q, n);
      double tail = q > 0 ? std::pow(q, 2 * n) * (2.0 * n * p / q - 1.0) : 0.0;
      out.variance = out.mean + out.mean * tail;
      break;
    }
    case BaseKind::p3: {
      out.mean = std::pow(q * (3.0 - p), n);
      // Var = mu - q^{2n} (2+q^2)^n + 4 n p q^{2n} (2+q^2)^{n-1}.
      double base = 2.0 + q * q;
      out.variance = out.mean - std::pow(q * q * base, n) +
                     4.0 * n * p * std::pow(q, 2 * n) * std::pow(base, n - 1);
      break;
    }
    default:
      throw std::invalid_argument("isolated_moments_theoretical: unsupported family");
  }
  if (out.variance < 0 && out.variance > -1e-12) out.variance = 0;
  out.lambda = out.mean;
  return out;
}

// Uniform random simple graph with N vertices and M edges (Floyd's subset
// sampling over the C(N,2) pair slots).
inline Graph sample_gnm(int vertices, std::int64_t edges, std::uint64_t seed) {
  if (vertices < 0) throw std::invalid_argument("sample_gnm: negative vertex count");
  std::int64_t slots = static_cast<std::int64_t>(vertices) * (vertices - 1) / 2;
  if (edges < 0 || edges > slots)
    throw std::invalid_argument("sample_gnm: M must lie in 0..C(N,2)");
  if (slots >= (std::int64_t{1} << 32))
    throw capacity_error("sample_gnm: C(N,2) exceeds the 2^32 slot cap");
  SplitMix64 rng = trial_rng(seed, 0);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(edges) * 2);
  for (std::int64_t t = slots - edges; t < slots; ++t) {
    std::int64_t r = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint32_t>(t + 1)));
    if (!chosen.insert(r).second) chosen.insert(t);
  }
  // Decode slot k -> pair (u,v), u < v, slots ordered (0,1),(0,2),(1,2),(0,3)...
  std::vector<Graph::Edge> e;
  e.reserve(chosen.size());
  for (std::int64_t k : chosen) {
    std::int64_t v = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
    while (v * (v - 1) / 2 > k) --v;
    while ((v + 1) * v / 2 <= k) ++v;
    std::int64_t u = k - v * (v - 1) / 2;
    e.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(vertices, std::move(e));
}

// Connectivity of a percolated G(N,M): each trial draws a fresh uniform
// M-edge graph, then keeps each of its edges with probability p.
inline PercolationEstimate estimate_gnm_connectivity(int vertices, std::int64_t edges, double p,
                                                     long trials, std::uint64_t seed,
                                                     int workers = 0) {
  check_probability(p);
  if (trials < 1) throw std::invalid_argument("estimate_gnm_connectivity: trials must be >= 1");
  std::int64_t slots = static_cast<std::int64_t>(vertices) * (vertices - 1) / 2;
  if (edges < 0 || edges > slots)
    throw std::invalid_argument("estimate_gnm_connectivity: M must lie in 0..C(N,2)");
  if (slots >= (std::int64_t{1} << 32))
    throw capacity_error("estimate_gnm_connectivity: C(N,2) exceeds the 2^32 slot cap");
  auto chunks = parallel_accumulate<std::uint64_t>(
      static_cast<std::uint64_t>(trials), workers, 0,
      [&](std::uint64_t& acc, std::uint64_t begin, std::uint64_t end) {
        detail::UnionFind uf;
        std::unordered_set<std::int64_t> chosen;
        std::vector<std::int64_t> slots_sorted;
        for (std::uint64_t t = begin; t < end; ++t) {
          SplitMix64 rng = trial_rng(seed, t);
          chosen.clear();
          for (std::int64_t s = slots - edges; s < slots; ++s) {
            std::int64_t r =
                static_cast<std::int64_t>(rng.next_below(static_cast<std::uint32_t>(s + 1)));
            if (!chosen.insert(r).second) chosen.insert(s);
          }
          // Percolate in sorted slot order so the draw sequence does not
          // depend on hash-set iteration order.
          slots_sorted.assign(chosen.begin(), chosen.end());
          std::sort(slots_sorted.begin(), slots_sorted.end());
          uf.reset(vertices);
          int components = vertices;
          for (std::int64_t k : slots_sorted) {
            if (rng.next_unit() >= p) continue;
            std::int64_t v = static_cast<std::int64_t>(
                (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
            while (v * (v - 1) / 2 > k) --v;
            while ((v + 1) * v / 2 <= k) ++v;
            std::int64_t u = k - v * (v - 1) / 2;
            if (uf.unite(static_cast<int>(u), static_cast<int>(v))) --components;
          }
          if (components == 1) ++acc;
        }
      });
  std::uint64_t hits = 0;
  for (auto c : chunks) hits += c;
  double phat = static_cast<double>(hits) / static_cast<double>(trials);
  return {"conn", phat, detail::bernoulli_stderr(phat, trials), trials, seed, "gnm", vertices, p};
}

struct QnVsGnm {
  PercolationEstimate qn;
  PercolationEstimate gnm;
  double pooled_stderr = 0;
};

// Percolated Q^n against percolated typical graphs with the same size:
// fresh G(2^n, n 2^{n-1}) samples at the same p. With common random numbers
// the two arms share per-trial seeds; default arms are independent.
inline QnVsGnm compare_qn_vs_gnm(int n, double p, long trials, std::uint64_t seed,
                                 int workers = 0, bool common_random_numbers = false) {
  ProductSpec spec{BaseKind::k2, n};
  Graph q = build(spec);
  int vertices = q.vertex_count();
  std::int64_t edges = q.edge_count();
  std::uint64_t q_seed = common_random_numbers ? seed : mix64(seed ^ 0x71C9A1B58FD23E07ull);
  std::uint64_t g_seed = common_random_numbers ? seed : mix64(seed ^ 0x2E8D4B96C7A3510Full);
  QnVsGnm out;
  out.qn = estimate_connectivity(q, p, trials, q_seed, workers);
  out.qn.family = "q";
  out.qn.n = n;
  out.gnm = estimate_gnm_connectivity(vertices, edges, p, trials, g_seed, workers);
  out.gnm.n = n;
  out.pooled_stderr = std::sqrt(out.qn.stderr_of_mean * out.qn.stderr_of_mean +
                                out.gnm.stderr_of_mean * out.gnm.stderr_of_mean);
  return out;
}

}  // namespace relcube
