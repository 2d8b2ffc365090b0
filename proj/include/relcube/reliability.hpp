#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "relcube/graph.hpp"
#include "relcube/parallel.hpp"
#include "relcube/percolation.hpp"
#include "relcube/poly_roots.hpp"

namespace relcube {

// Exact all-terminal reliability data: s[k] counts the connected spanning
// subgraphs with exactly k edges, so R(p) = sum_k s[k] p^k (1-p)^(m-k).
struct ReliabilityCoefficients {
  int n = 0;
  int m = 0;
  std::vector<BigInt> s;  // indexed 0..m
};

inline constexpr int kDefaultReliabilityCap = 25;

// Exact coefficients by enumerating all 2^m edge subsets with a union-find
// spanning test, tallied by popcount.
inline ReliabilityCoefficients reliability_coefficients(const Graph& g,
                                                        int cap = kDefaultReliabilityCap,
                                                        int workers = 0) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (m > cap)
    throw capacity_error("reliability_coefficients: m = " + std::to_string(m) +
                         " exceeds the enumeration cap " + std::to_string(cap) +
                         " (2^m subsets)");
  if (n < 1) throw std::invalid_argument("reliability_coefficients: empty graph");

  std::vector<int> eu(m), ev(m);
  for (int i = 0; i < m; ++i) {
    eu[i] = g.edges()[i].first;
    ev[i] = g.edges()[i].second;
  }
  std::uint64_t total = std::uint64_t{1} << m;
  auto chunks = parallel_accumulate<std::vector<std::uint64_t>>(
      total, workers, std::vector<std::uint64_t>(m + 1, 0),
      [&](std::vector<std::uint64_t>& tally, std::uint64_t begin, std::uint64_t end) {
        detail::UnionFind uf;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          int k = std::popcount(mask);
          if (k < n - 1) continue;
          uf.reset(n);
          int components = n;
          std::uint64_t rest = mask;
          while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (uf.unite(eu[i], ev[i]) && --components == 1) break;
          }
          if (components == 1) ++tally[k];
        }
      });
  ReliabilityCoefficients out{n, m, std::vector<BigInt>(m + 1, 0)};
  for (const auto& tally : chunks)
    for (int k = 0; k <= m; ++k) out.s[k] += tally[k];
  return out;
}

// R(p) = sum s_k p^k (1-p)^(m-k). Every term is a nonnegative double well
// inside range, so plain ascending summation is stable.
inline double evaluate(const ReliabilityCoefficients& c, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("evaluate: p must lie in [0,1]");
  double q = 1.0 - p;
  double r = 0.0;
  for (int k = 0; k <= c.m; ++k) {
    if (c.s[k] == 0) continue;
    double term = static_cast<double>(c.s[k]);
    term *= std::pow(p, k) * std::pow(q, c.m - k);
    r += term;
  }
  return r;
}

// Independent identities the enumeration must satisfy; a mismatch means an
// enumeration bug, not a modelling choice.
struct ReliabilityCrossCheck {
  BigInt spanning_trees;    // matrix-tree value
  long bridges = 0;         // from the bridge finder
  bool trees_ok = false;    // s_{n-1} == spanning trees
  bool cuts_ok = false;     // s_{m-1} == m - bridges (connected g)
  bool top_ok = false;      // s_m == 1 iff g connected
  bool all_ok() const { return trees_ok && cuts_ok && top_ok; }
};

inline ReliabilityCrossCheck cross_check(const Graph& g, const ReliabilityCoefficients& c) {
  ReliabilityCrossCheck out;
  out.spanning_trees = count_spanning_trees(g);
  out.bridges = count_bridges(g);
  bool connected = is_connected(g);
  int n = c.n, m = c.m;
  out.trees_ok = (n - 1 <= m) ? (c.s[n - 1] == out.spanning_trees) : (out.spanning_trees == 0);
  if (m >= 1)
    out.cuts_ok = connected ? (c.s[m - 1] == BigInt(m - out.bridges)) : (c.s[m - 1] == 0);
  else
    out.cuts_ok = true;
  out.top_ok = c.s[m] == BigInt(connected ? 1 : 0);
  return out;
}

enum class CompareVerdict { identical, a_dominates, b_dominates, crossover };

struct CompareResult {
  CompareVerdict verdict = CompareVerdict::identical;
  std::vector<double> crossover_points;  // sign changes of R_a - R_b in (0,1)
  std::vector<double> touch_points;      // even-multiplicity contacts (no rank change)
};

// Decides the pointwise order of two reliability polynomials on (0,1) from
// the exact coefficient difference. If every nonzero difference has one sign
// the basis positivity settles it outright; otherwise the difference is
// converted to the power basis exactly and its roots isolated.
inline CompareResult compare(const ReliabilityCoefficients& a, const ReliabilityCoefficients& b) {
  if (a.n != b.n || a.m != b.m)
    throw std::invalid_argument("compare: coefficient vectors must share (n, m)");
  std::vector<BigInt> d(a.m + 1);
  bool all_zero = true;
  int low_sign = 0;
  for (int i = 0; i <= a.m; ++i) {
    d[i] = a.s[i] - b.s[i];
    if (d[i] != 0) {
      all_zero = false;
      if (low_sign == 0) low_sign = bigint_sign(d[i]);
    }
  }
  CompareResult out;
  if (all_zero) {
    out.verdict = CompareVerdict::identical;
    return out;
  }
  if (sign_variations(d) == 0) {
    out.verdict = low_sign > 0 ? CompareVerdict::a_dominates : CompareVerdict::b_dominates;
    return out;
  }
  RootScan scan = isolate_roots_01(bernstein_like_to_power(d));
  out.crossover_points = scan.crossings;
  out.touch_points = scan.touches;
  if (scan.crossings.empty()) {
    // Mixed coefficient signs but no sign change on (0,1): one graph still
    // dominates; near p = 0 the lowest nonzero difference decides.
    out.verdict = low_sign > 0 ? CompareVerdict::a_dominates : CompareVerdict::b_dominates;
  } else {
    out.verdict = CompareVerdict::crossover;
  }
  return out;
}

}  // namespace relcube
