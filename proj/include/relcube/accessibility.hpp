#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcube/graph.hpp"
#include "relcube/parallel.hpp"
#include "relcube/rng.hpp"

namespace relcube {

// Random accessibility: X_j is the number of simple-random-walk transitions
// needed before j vertices other than the start have been visited. One walk
// yields every milestone, since the X_j are nested.

struct StartPolicy {
  enum Kind { fixed, degree_weighted } kind = fixed;
  int vertex = 0;

  static StartPolicy at(int v) { return {fixed, v}; }
  static StartPolicy weighted() { return {degree_weighted, 0}; }
};

struct AccessibilityEstimate {
  int j = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  long trials = 0;
  std::uint64_t seed = 0;
};

namespace detail {

struct WalkSums {
  std::vector<unsigned __int128> sum;
  std::vector<unsigned __int128> sum_sq;
};

// Runs walks and accumulates transition counts at milestones 1..max_j.
inline WalkSums run_walks(const Graph& g, int max_j, StartPolicy policy, long trials,
                          std::uint64_t seed, int workers) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> degree_cumulative;
  if (policy.kind == StartPolicy::degree_weighted) {
    degree_cumulative.resize(n);
    std::uint32_t acc = 0;
    for (int v = 0; v < n; ++v) {
      acc += static_cast<std::uint32_t>(g.degree(v));
      degree_cumulative[v] = acc;
    }
  }
  auto chunks = parallel_accumulate<WalkSums>(
      static_cast<std::uint64_t>(trials), workers,
      WalkSums{std::vector<unsigned __int128>(max_j + 1, 0),
               std::vector<unsigned __int128>(max_j + 1, 0)},
      [&](WalkSums& acc, std::uint64_t begin, std::uint64_t end) {
        std::vector<char> visited(n);
        for (std::uint64_t t = begin; t < end; ++t) {
          SplitMix64 rng = trial_rng(seed, t);
          int start;
          if (policy.kind == StartPolicy::degree_weighted) {
            std::uint32_t pick = rng.next_below(degree_cumulative.back());
            start = static_cast<int>(std::lower_bound(degree_cumulative.begin(),
                                                      degree_cumulative.end(), pick + 1) -
                                     degree_cumulative.begin());
          } else {
            start = policy.vertex;
          }
          std::fill(visited.begin(), visited.end(), 0);
          int current = start;
          int found = 0;
          std::uint64_t transitions = 0;
          while (found < max_j) {
            int deg = g.degree(current);
            current = g.neighbors_begin(current)[rng.next_below(
                static_cast<std::uint32_t>(deg))];
            ++transitions;
            if (current != start && !visited[current]) {
              visited[current] = 1;
              ++found;
              acc.sum[found] += transitions;
              acc.sum_sq[found] += static_cast<unsigned __int128>(transitions) * transitions;
            }
          }
        }
      });
  WalkSums total{std::vector<unsigned __int128>(max_j + 1, 0),
                 std::vector<unsigned __int128>(max_j + 1, 0)};
  for (const auto& c : chunks)
    for (int j = 1; j <= max_j; ++j) {
      total.sum[j] += c.sum[j];
      total.sum_sq[j] += c.sum_sq[j];
    }
  return total;
}

inline AccessibilityEstimate to_estimate(const WalkSums& sums, int j, long trials,
                                         std::uint64_t seed) {
  double t = static_cast<double>(trials);
  double mean = static_cast<double>(sums.sum[j]) / t;
  double variance = 0;
  if (trials > 1) {
    double ss = static_cast<double>(sums.sum_sq[j]);
    variance = (ss - t * mean * mean) / (t - 1.0);
    if (variance < 0) variance = 0;
  }
  return {j, mean, variance, trials, seed};
}

inline void check_walk_inputs(const Graph& g, int j, StartPolicy policy, long trials) {
  if (trials < 1) throw std::invalid_argument("accessibility: trials must be >= 1");
  if (j < 1 || j > g.vertex_count() - 1)
    throw std::invalid_argument("accessibility: j must lie in 1..n-1");
  if (policy.kind == StartPolicy::fixed &&
      (policy.vertex < 0 || policy.vertex >= g.vertex_count()))
    throw std::invalid_argument("accessibility: start vertex out of range");
  if (!is_connected(g))
    throw std::invalid_argument("accessibility: graph must be connected");
}

}  // namespace detail

inline AccessibilityEstimate estimate_accessibility(const Graph& g, int j, StartPolicy policy,
                                                    long trials, std::uint64_t seed,
                                                    int workers = 0) {
  detail::check_walk_inputs(g, j, policy, trials);
  auto sums = detail::run_walks(g, j, policy, trials, seed, workers);
  return detail::to_estimate(sums, j, trials, seed);
}

inline std::vector<AccessibilityEstimate> accessibility_profile(const Graph& g,
                                                                StartPolicy policy, long trials,
                                                                std::uint64_t seed,
                                                                int workers = 0) {
  int max_j = g.vertex_count() - 1;
  detail::check_walk_inputs(g, max_j, policy, trials);
  auto sums = detail::run_walks(g, max_j, policy, trials, seed, workers);
  std::vector<AccessibilityEstimate> out;
  out.reserve(max_j);
  for (int j = 1; j <= max_j; ++j) out.push_back(detail::to_estimate(sums, j, trials, seed));
  return out;
}

}  // namespace relcube
