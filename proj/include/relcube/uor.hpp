#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relcube/canonical.hpp"
#include "relcube/graph.hpp"
#include "relcube/parallel.hpp"
#include "relcube/reliability.hpp"

namespace relcube {

// One representative per isomorphism class of graphs with n vertices and m
// edges, keyed by canonical mask.
struct GraphClassCatalog {
  int n = 0;
  int m = 0;
  bool connected_only = true;
  std::vector<std::uint64_t> classes;  // canonical masks, sorted

  Graph representative(std::size_t i) const { return mask_to_graph(n, classes[i]); }
};

namespace detail {

inline bool mask_connected(int n, std::uint64_t mask) {
  std::array<std::uint8_t, 8> adj{};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_slot(i, j) & 1) {
        adj[i] |= static_cast<std::uint8_t>(1u << j);
        adj[j] |= static_cast<std::uint8_t>(1u << i);
      }
  unsigned reached = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    unsigned rest = frontier;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << n) - 1;
}

}  // namespace detail

// Isomorph-free catalog of G(n, m): scans every m-subset of the C(n,2) pair
// slots, filters (optionally) to connected graphs, canonicalizes, dedupes.
inline GraphClassCatalog enumerate_classes(int n, int m, bool connected_only = true,
                                           int workers = 0) {
  if (n < 1 || n > kCanonicalMaxVertices)
    throw std::invalid_argument("enumerate_classes: n must lie in 1..8");
  int slots = n * (n - 1) / 2;
  if (m < 0 || m > slots) throw std::invalid_argument("enumerate_classes: m out of range");
  GraphClassCatalog out{n, m, connected_only, {}};

  // Materialize all masks of popcount m (Gosper's hack), then canonicalize
  // in parallel; sort + unique makes the result worker-count independent.
  std::vector<std::uint32_t> masks;
  if (m == 0) {
    masks.push_back(0);
  } else {
    std::uint32_t subset = (std::uint32_t{1} << m) - 1;
    std::uint32_t limit = std::uint32_t{1} << slots;
    while (subset < limit) {
      masks.push_back(subset);
      std::uint32_t c = subset & (~subset + 1);
      std::uint32_t r = subset + c;
      if (r == 0) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  auto chunks = parallel_accumulate<std::vector<std::uint64_t>>(
      masks.size(), workers, {},
      [&](std::vector<std::uint64_t>& acc, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          std::uint64_t mask = masks[i];
          if (connected_only && !detail::mask_connected(n, mask)) continue;
          acc.push_back(canonical_mask(n, mask));
        }
      });
  for (auto& c : chunks)
    out.classes.insert(out.classes.end(), c.begin(), c.end());
  std::sort(out.classes.begin(), out.classes.end());
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
  return out;
}

// Verdict for one (n, m) family: either one coefficient vector beats every
// other for all p in (0,1), certified by the difference polynomials having
// no sign change there, or a witness pair with its crossover points.
struct UorReport {
  int n = 0;
  int m = 0;
  bool uor_exists = false;
  std::vector<BigInt> best;          // optimal near p -> 0 (the UOR when it exists)
  std::uint64_t best_class = 0;      // canonical mask of a representative
  std::vector<BigInt> rival;         // optimal near p -> 1 when there is no UOR
  std::uint64_t rival_class = 0;
  std::vector<double> crossover_points;
  GraphClassCatalog catalog;
  std::vector<std::vector<BigInt>> class_coeffs;  // aligned with catalog.classes
};

namespace detail {

// Order near p -> 0: the first differing coefficient from the low end wins.
inline bool better_near_zero(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// Order near p -> 1: the first differing coefficient from the high end wins.
inline bool better_near_one(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace detail

inline UorReport find_uor(int n, int m, int workers = 0) {
  UorReport report;
  report.n = n;
  report.m = m;
  report.catalog = enumerate_classes(n, m, true, workers);
  std::size_t count = report.catalog.classes.size();
  report.class_coeffs.assign(count, {});
  if (count == 0) return report;

  auto chunks = parallel_accumulate<int>(
      count, workers, 0, [&](int&, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          Graph g = report.catalog.representative(i);
          report.class_coeffs[i] = reliability_coefficients(g, kDefaultReliabilityCap, 1).s;
        }
      });
  (void)chunks;

  // Group identical coefficient vectors; ties are a single row.
  std::map<std::vector<BigInt>, std::uint64_t> first_class_of;
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, fresh] = first_class_of.try_emplace(report.class_coeffs[i],
                                                  report.catalog.classes[i]);
    if (!fresh && report.catalog.classes[i] < it->second)
      it->second = report.catalog.classes[i];
  }

  const std::vector<BigInt>* near_zero_best = nullptr;
  const std::vector<BigInt>* near_one_best = nullptr;
  for (const auto& [vec, cls] : first_class_of) {
    if (!near_zero_best || detail::better_near_zero(vec, *near_zero_best)) near_zero_best = &vec;
    if (!near_one_best || detail::better_near_one(vec, *near_one_best)) near_one_best = &vec;
  }

  report.best = *near_zero_best;
  report.best_class = first_class_of.at(report.best);

  auto coeffs_of = [&](const std::vector<BigInt>& s) {
    return ReliabilityCoefficients{n, m, s};
  };
  ReliabilityCoefficients a = coeffs_of(report.best);

  // The near-zero optimum is strictly best on some right-neighborhood of 0,
  // so it is the UOR exactly when it dominates every other vector.
  bool dominates_all = true;
  const std::vector<BigInt>* witness = nullptr;
  CompareResult witness_cmp;
  for (const auto& [vec, cls] : first_class_of) {
    if (vec == report.best) continue;
    CompareResult cmp = compare(a, coeffs_of(vec));
    if (cmp.verdict == CompareVerdict::crossover || cmp.verdict == CompareVerdict::b_dominates) {
      dominates_all = false;
      // Prefer the near-1 optimum as the reported rival.
      if (!witness || vec == *near_one_best) {
        witness = &vec;
        witness_cmp = cmp;
        if (vec == *near_one_best) break;
      }
    }
  }
  if (dominates_all) {
    report.uor_exists = true;
    return report;
  }
  report.uor_exists = false;
  report.rival = *witness;
  report.rival_class = first_class_of.at(report.rival);
  report.crossover_points = witness_cmp.crossover_points;
  return report;
}

// Edge connectivity by brute force over small edge subsets: the smallest k
// whose removal of some k edges disconnects the graph. Fine for n <= 8.
inline int edge_connectivity(const Graph& g) {
  if (!is_connected(g)) return 0;
  int m = g.edge_count();
  int n = g.vertex_count();
  if (n <= 1) return 0;
  int min_degree = g.degree(0);
  for (int v = 1; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  for (int k = 1; k < min_degree; ++k) {
    // All k-subsets of edges via Gosper's hack.
    if (m > 62) throw capacity_error("edge_connectivity: too many edges for subset scan");
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << m;
    detail::UnionFind uf;
    while (subset < limit) {
      uf.reset(n);
      int components = n;
      for (int i = 0; i < m; ++i) {
        if (subset >> i & 1) continue;
        if (uf.unite(g.edges()[i].first, g.edges()[i].second)) --components;
      }
      if (components > 1) return k;
      std::uint64_t c = subset & (~subset + 1);
      std::uint64_t r = subset + c;
      if (r == 0) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return min_degree;
}

namespace detail {

// Subdivides seed lines with `extra` degree-2 vertices, round-robin in the
// given line order, so per-line counts differ by at most one.
inline Graph subdivide_balanced(int seed_vertices, const std::vector<Graph::Edge>& lines,
                                int extra) {
  int next_vertex = seed_vertices;
  std::vector<int> per_line(lines.size(), extra / static_cast<int>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (static_cast<int>(i) < extra % static_cast<int>(lines.size())) ++per_line[i];
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int prev = lines[i].first;
    for (int t = 0; t < per_line[i]; ++t) {
      edges.emplace_back(prev, next_vertex);
      prev = next_vertex++;
    }
    edges.emplace_back(prev, lines[i].second);
  }
  return Graph(next_vertex, std::move(edges));
}

}  // namespace detail

// Known optimal families for sparse m. m = n+1: two hubs joined by three
// internally disjoint paths whose internal sizes differ by at most one.
// m = n+2: K4 with its lines subdivided evenly; the line order interleaves
// disjoint pairs first, which is the balanced assignment that maximizes the
// spanning-tree count (an adjacent pair at n = 6 gives 35 trees, a disjoint
// pair the optimal 36).
inline Graph boesch_construction(int n, int m) {
  if (m == n + 1) {
    if (n < 5) throw std::invalid_argument("boesch_construction: m = n+1 needs n >= 5");
    // Multigraph seed: 2 vertices, 3 parallel lines; every internal count is
    // at least 1, so the result is simple.
    std::vector<Graph::Edge> lines{{0, 1}, {0, 1}, {0, 1}};
    return detail::subdivide_balanced(2, lines, n - 2);
  }
  if (m == n + 2) {
    if (n < 4) throw std::invalid_argument("boesch_construction: m = n+2 needs n >= 4");
    std::vector<Graph::Edge> lines{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
    return detail::subdivide_balanced(4, lines, n - 4);
  }
  throw std::invalid_argument("boesch_construction: m must be n+1 or n+2");
}

// m = n+3: K_{3,3} with lines subdivided evenly, matchings first.
inline Graph wang_construction(int n) {
  if (n < 6) throw std::invalid_argument("wang_construction: needs n >= 6");
  std::vector<Graph::Edge> lines{{0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3},
                                 {0, 5}, {1, 3}, {2, 4}};
  return detail::subdivide_balanced(6, lines, n - 6);
}

// Edge counts of the known families without a uniformly best graph:
// n(n-1)/2 - (n+2)/2 for even n >= 6, n(n-1)/2 - (n+5)/2 for odd n >= 7.
inline long long counterexample_edge_count(int n) {
  if (n < 6) throw std::invalid_argument("counterexample_edge_count: needs n >= 6");
  long long full = static_cast<long long>(n) * (n - 1) / 2;
  return n % 2 == 0 ? full - (n + 2) / 2 : full - (n + 5) / 2;
}

}  // namespace relcube
