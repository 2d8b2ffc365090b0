#pragma once

#include <string>
#include <vector>

#include "relcube/graph.hpp"

namespace relcube {

enum class BaseKind { k2, k3, p3, custom };

// A Cartesian power: base graph raised to `exponent`. Vertex labels are the
// base-|V| positional encodings, so digit i of a label is the coordinate in
// factor i and the "first m vertices" are exactly {0..m-1}.
struct ProductSpec {
  BaseKind base = BaseKind::k2;
  int exponent = 1;
  Graph custom_base;  // used only when base == custom
  std::int64_t vertex_cap = kDefaultVertexCap;
};

inline Graph base_graph(const ProductSpec& spec) {
  switch (spec.base) {
    case BaseKind::k2:
      return Graph::complete(2);
    case BaseKind::k3:
      return Graph::complete(3);
    case BaseKind::p3:
      return Graph::path(3);
    case BaseKind::custom:
      return spec.custom_base;
  }
  throw std::invalid_argument("base_graph: unknown base");
}

namespace detail {

inline void check_spec(const ProductSpec& spec, int base_n) {
  if (spec.exponent < 1) throw std::invalid_argument("ProductSpec: exponent must be >= 1");
  std::int64_t v = 1;
  for (int i = 0; i < spec.exponent; ++i) {
    v *= base_n;
    if (v > spec.vertex_cap)
      throw capacity_error("ProductSpec: " + std::to_string(base_n) + "^" +
                           std::to_string(spec.exponent) + " vertices exceed the vertex cap " +
                           std::to_string(spec.vertex_cap));
  }
}

inline std::int64_t pow_ll(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace detail

inline std::int64_t vertex_count(const ProductSpec& spec) {
  Graph base = base_graph(spec);
  detail::check_spec(spec, base.vertex_count());
  return detail::pow_ll(base.vertex_count(), spec.exponent);
}

// n * |E(base)| * |V(base)|^(n-1): each edge of each factor appears once per
// assignment of the remaining coordinates.
inline std::int64_t edge_count(const ProductSpec& spec) {
  Graph base = base_graph(spec);
  detail::check_spec(spec, base.vertex_count());
  return static_cast<std::int64_t>(spec.exponent) * base.edge_count() *
         detail::pow_ll(base.vertex_count(), spec.exponent - 1);
}

// Degree from the digit expansion alone, without building the graph.
inline int degree_of(const ProductSpec& spec, std::int64_t vertex) {
  Graph base = base_graph(spec);
  int b = base.vertex_count();
  detail::check_spec(spec, b);
  if (vertex < 0 || vertex >= detail::pow_ll(b, spec.exponent))
    throw std::invalid_argument("degree_of: vertex out of range");
  int deg = 0;
  for (int i = 0; i < spec.exponent; ++i) {
    deg += base.degree(static_cast<int>(vertex % b));
    vertex /= b;
  }
  return deg;
}

inline Graph build(const ProductSpec& spec) {
  Graph base = base_graph(spec);
  int b = base.vertex_count();
  detail::check_spec(spec, b);
  std::int64_t nv = detail::pow_ll(b, spec.exponent);
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (std::int64_t v = 0; v < nv; ++v) {
    std::int64_t place = 1;
    std::int64_t rest = v;
    for (int i = 0; i < spec.exponent; ++i) {
      int digit = static_cast<int>(rest % b);
      for (const int* w = base.neighbors_begin(digit); w != base.neighbors_end(digit); ++w) {
        if (*w > digit)
          edges.emplace_back(static_cast<int>(v), static_cast<int>(v + (*w - digit) * place));
      }
      rest /= b;
      place *= b;
    }
  }
  return Graph(static_cast<int>(nv), std::move(edges));
}

inline std::string family_name(BaseKind base) {
  switch (base) {
    case BaseKind::k2:
      return "q";
    case BaseKind::k3:
      return "q3";
    case BaseKind::p3:
      return "p3";
    case BaseKind::custom:
      return "custom";
  }
  return "?";
}

}  // namespace relcube
