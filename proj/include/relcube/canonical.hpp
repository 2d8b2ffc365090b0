#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "relcube/graph.hpp"

namespace relcube {

// Canonical forms for graphs on at most 8 vertices, packed as bitmasks over
// the C(n,2) vertex-pair slots. Slot order is new-vertex-major:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... so slot(i,j) = j(j-1)/2 + i
// for i < j. The canonical form is the minimum mask over all vertex
// relabelings, where the comparison reads pairs in slot order with the
// earliest pair most significant.

inline constexpr int kCanonicalMaxVertices = 8;

inline int pair_slot(int i, int j) { return j * (j - 1) / 2 + i; }  // requires i < j

inline std::uint64_t graph_to_mask(const Graph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices)
    throw std::invalid_argument("graph_to_mask: at most 8 vertices");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_slot(u, v);
  return mask;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
  std::vector<Graph::Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_slot(i, j) & 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

namespace detail {

// Branch-and-bound over vertex placements. At level k the bits of the new
// vertex against the already-placed ones form a chunk (earlier vertex more
// significant); a placement is pruned as soon as its chunk exceeds the
// incumbent best at that level. Candidates are tried in ascending chunk
// order, which makes the first descent greedy and the pruning tight.
struct CanonicalSearch {
  int n;
  std::array<std::uint8_t, 8> adj{};      // adjacency rows of the input mask
  std::array<std::uint8_t, 8> best{};     // chunk per level; 0xFF = unknown
  std::array<std::uint8_t, 8> order{};

  void dfs(int level, unsigned used) {
    if (level == n) return;
    struct Cand {
      std::uint8_t chunk, vertex;
    };
    std::array<Cand, 8> cands;
    int count = 0;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      std::uint8_t chunk = 0;
      for (int i = 0; i < level; ++i)
        chunk = static_cast<std::uint8_t>((chunk << 1) | (adj[order[i]] >> v & 1));
      cands[count++] = {chunk, static_cast<std::uint8_t>(v)};
    }
    std::sort(cands.begin(), cands.begin() + count,
              [](const Cand& a, const Cand& b) { return a.chunk < b.chunk; });
    for (int c = 0; c < count; ++c) {
      if (cands[c].chunk > best[level]) break;
      if (cands[c].chunk < best[level]) {
        best[level] = cands[c].chunk;
        for (int l = level + 1; l < n; ++l) best[l] = 0xFF;
      }
      order[level] = cands[c].vertex;
      dfs(level + 1, used | (1u << cands[c].vertex));
    }
  }
};

}  // namespace detail

inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > kCanonicalMaxVertices)
    throw std::invalid_argument("canonical_mask: at most 8 vertices");
  if (n <= 1) return 0;
  detail::CanonicalSearch search;
  search.n = n;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_slot(i, j) & 1) {
        search.adj[i] |= static_cast<std::uint8_t>(1u << j);
        search.adj[j] |= static_cast<std::uint8_t>(1u << i);
      }
  search.best.fill(0xFF);
  search.best[0] = 0;  // level 0 places one vertex, no bits yet
  search.dfs(0, 0);
  // Reassemble the mask from the per-level chunks: chunk bit for placed
  // vertex i (MSB-first) is the pair (i, k).
  std::uint64_t canon = 0;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i)
      if (search.best[k] >> (k - 1 - i) & 1) canon |= std::uint64_t{1} << pair_slot(i, k);
  return canon;
}

inline Graph canonical_graph(const Graph& g) {
  return mask_to_graph(g.vertex_count(), canonical_mask(g.vertex_count(), graph_to_mask(g)));
}

}  // namespace relcube
