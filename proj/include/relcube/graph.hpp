#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "relcube/common.hpp"

namespace relcube {

inline constexpr std::int64_t kDefaultVertexCap = std::int64_t{1} << 24;

// Undirected simple graph. Vertices are 0..n-1; edges are stored sorted
// lexicographically with u < v, and the position in that list is the stable
// edge index used by percolation masks and subset enumeration.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
      if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("Graph: duplicate edge rejected");
    build_adjacency();
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const int* neighbors_begin(int v) const { return flat_.data() + offset_[v]; }
  const int* neighbors_end(int v) const { return flat_.data() + offset_[v + 1]; }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  static Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
  }

  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(e));
  }

  static Graph path(int n) {
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
  }

  static Graph edgeless(int n) { return Graph(n, {}); }

  // Text format: first line "n m", then m lines "u v" (0-based).
  static Graph from_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph text: missing header 'n m'");
    std::vector<Edge> e;
    e.reserve(m);
    for (int i = 0; i < m; ++i) {
      int u, v;
      if (!(in >> u >> v))
        throw std::invalid_argument("graph text: expected " + std::to_string(m) + " edge lines");
      e.emplace_back(u, v);
    }
    return Graph(n, std::move(e));
  }

  static Graph from_text(const std::string& s) {
    std::istringstream in(s);
    return from_text(in);
  }

  // Canonical output: edges sorted lexicographically (the storage order).
  void write_text(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  }

 private:
  void build_adjacency() {
    offset_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++offset_[u + 1];
      ++offset_[v + 1];
    }
    std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
    flat_.resize(2 * edges_.size());
    std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
    for (const auto& [u, v] : edges_) {
      flat_[cursor[u]++] = v;
      flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
      std::sort(flat_.begin() + offset_[v], flat_.begin() + offset_[v + 1]);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<int> flat_;
};

struct ComponentPartition {
  std::vector<int> label;               // component id per vertex, 0-based
  std::vector<std::vector<int>> parts;  // vertices per component
  int count() const { return static_cast<int>(parts.size()); }
};

inline ComponentPartition connected_components(const Graph& g) {
  int n = g.vertex_count();
  ComponentPartition out;
  out.label.assign(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (out.label[s] != -1) continue;
    int id = static_cast<int>(out.parts.size());
    out.parts.emplace_back();
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.parts[id].push_back(v);
      for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w) {
        if (out.label[*w] == -1) {
          out.label[*w] = id;
          stack.push_back(*w);
        }
      }
    }
    std::sort(out.parts[id].begin(), out.parts[id].end());
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w) {
      if (!seen[*w]) {
        seen[*w] = 1;
        ++reached;
        stack.push_back(*w);
      }
    }
  }
  return reached == n;
}

// Number of edges whose removal increases the component count. Iterative
// low-link DFS; parallel edges cannot occur in a simple graph, so an edge
// (u,v) is a bridge exactly when low[v] > disc[u] for the tree edge u->v.
inline int count_bridges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  int timer = 0, bridges = 0;

  struct Frame {
    int v;
    const int* it;
    const int* end;
  };
  std::vector<Frame> stack;
  // Edge id of the tree edge into v, to skip re-walking it (not its twin).
  auto edge_id = [&g](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Graph::Edge{u, v});
    return static_cast<int>(it - g.edges().begin());
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, g.neighbors_begin(s), g.neighbors_end(s)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.it == f.end) {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] > disc[u]) ++bridges;
        }
        continue;
      }
      int w = *f.it++;
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        parent_edge[w] = edge_id(f.v, w);
        stack.push_back({w, g.neighbors_begin(w), g.neighbors_end(w)});
      } else if (parent_edge[f.v] != edge_id(f.v, w)) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    }
  }
  return bridges;
}

// Exact spanning-tree count via the matrix-tree theorem: integer determinant
// of a reduced Laplacian, fraction-free (Bareiss) elimination. Returns 0 for
// disconnected graphs with n >= 2; a single vertex has one spanning tree.
inline BigInt count_spanning_trees(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("count_spanning_trees: need n >= 1");
  if (n == 1) return 1;
  int dim = n - 1;
  std::vector<std::vector<BigInt>> a(dim, std::vector<BigInt>(dim, 0));
  for (int v = 0; v < dim; ++v) a[v][v] = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    if (u < dim && v < dim) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < dim; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot == -1) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[dim - 1][dim - 1] : -a[dim - 1][dim - 1];
}

// Erdos-Gallai test. Input must be sorted nonincreasing; the empty sequence
// is graphic.
inline bool is_graphic(const std::vector<int>& degrees) {
  int n = static_cast<int>(degrees.size());
  for (int i = 0; i + 1 < n; ++i)
    if (degrees[i] < degrees[i + 1])
      throw std::invalid_argument("is_graphic: sequence must be nonincreasing");
  if (n == 0) return true;
  long long total = 0;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("is_graphic: negative degree");
    total += d;
  }
  if (total % 2 != 0) return false;
  std::vector<long long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + degrees[i];
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += degrees[k - 1];
    // Sum of min(k, d_j) over j > k: degrees are nonincreasing, so entries
    // >= k contribute k each and the tail contributes its own sum.
    auto split = std::lower_bound(degrees.begin() + k, degrees.end(), k,
                                  [](int d, int key) { return d >= key; });
    long long idx = split - degrees.begin();
    long long rhs = static_cast<long long>(k) * (k - 1) +
                    static_cast<long long>(k) * (idx - k) + suffix[idx];
    if (lhs > rhs) return false;
  }
  return true;
}

// Cartesian product; vertex (u,v) is encoded as u*|V_H| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h,
                               std::int64_t vertex_cap = kDefaultVertexCap) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw std::invalid_argument("cartesian_product: factors must be nonempty");
  std::int64_t nv = static_cast<std::int64_t>(g.vertex_count()) * h.vertex_count();
  if (nv > vertex_cap)
    throw capacity_error("cartesian_product: product has " + std::to_string(nv) +
                         " vertices, exceeding the vertex cap " + std::to_string(vertex_cap));
  int hn = h.vertex_count();
  std::vector<Graph::Edge> e;
  e.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edge_count() +
            static_cast<std::size_t>(h.vertex_count()) * g.edge_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (const auto& [v, w] : h.edges()) e.emplace_back(u * hn + v, u * hn + w);
  for (const auto& [u, w] : g.edges())
    for (int v = 0; v < hn; ++v) e.emplace_back(u * hn + v, w * hn + v);
  return Graph(static_cast<int>(nv), std::move(e));
}

}  // namespace relcube
