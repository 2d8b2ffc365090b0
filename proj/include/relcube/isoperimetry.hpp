#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "relcube/common.hpp"
#include "relcube/graph.hpp"

namespace relcube {

// Digit-sum machinery behind the exact edge-isoperimetric profiles of the
// binary and ternary cube graphs. With vertices in positional order, the
// prefix {0..m-1} attains the extremes:
//   max induced edges  e(m) = f(0,m)
//   min edge boundary  b(m) = d*m - 2 f(0,m)   (d-regular graph)
// where f(l,m) = sum_{l <= i < m} h(i) and h is the digit sum.

inline int digit_sum(std::int64_t i, int base) {
  if (i < 0) throw std::invalid_argument("digit_sum: negative argument");
  if (base != 2 && base != 3) throw std::invalid_argument("digit_sum: base must be 2 or 3");
  int s = 0;
  while (i > 0) {
    s += static_cast<int>(i % base);
    i /= base;
  }
  return s;
}

inline std::int64_t f_sum_linear(std::int64_t l, std::int64_t m, int base) {
  if (l < 0 || l > m) throw std::invalid_argument("f_sum: need 0 <= l <= m");
  std::int64_t s = 0;
  for (std::int64_t i = l; i < m; ++i) s += digit_sum(i, base);
  return s;
}

namespace detail {

// Sum of digit sums over 0..m-1, one digit position at a time: position j
// cycles through blocks of base^j equal digits, so full cycles and the
// partial tail are counted in closed form.
inline std::int64_t prefix_digit_sum(std::int64_t m, int base) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  std::int64_t place = 1;
  while (place < m) {
    std::int64_t full = 0, rem = m;
    if (place <= kMax / base) {
      std::int64_t cycle = place * base;
      full = m / cycle;
      rem = m % cycle;
    }
    total += full * place * (static_cast<std::int64_t>(base) * (base - 1) / 2);
    for (int d = 1; d < base; ++d) {
      if (rem < 1 || place > (rem - 1) / d) continue;  // block not reached
      std::int64_t in_block = rem - static_cast<std::int64_t>(d) * place;
      if (in_block > place) in_block = place;
      total += d * in_block;
    }
    if (place > kMax / base) break;
    place *= base;
  }
  return total;
}

}  // namespace detail

// O(log m) evaluation of f(l,m); f_sum_linear is the cross-check route.
inline std::int64_t f_sum(std::int64_t l, std::int64_t m, int base) {
  if (l < 0 || l > m) throw std::invalid_argument("f_sum: need 0 <= l <= m");
  if (base != 2 && base != 3) throw std::invalid_argument("f_sum: base must be 2 or 3");
  return detail::prefix_digit_sum(m, base) - detail::prefix_digit_sum(l, base);
}

namespace detail {

inline std::int64_t iso_vertex_count(int base, int n) {
  if (base != 2 && base != 3) throw std::invalid_argument("isoperimetry: base must be 2 or 3");
  if (n < 1 || n > 39) throw std::invalid_argument("isoperimetry: exponent out of range");
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) v *= base;
  return v;
}

}  // namespace detail

// Maximum induced-edge count over m-vertex subsets; attained by {0..m-1}.
inline std::int64_t max_induced_edges(int base, int n, std::int64_t m) {
  std::int64_t nv = detail::iso_vertex_count(base, n);
  if (m < 1 || m > nv)
    throw std::invalid_argument("max_induced_edges: m out of range 1.." + std::to_string(nv));
  return f_sum(0, m, base);
}

// Minimum edge boundary over m-vertex subsets: d*m - 2*f(0,m) with d the
// regular degree (n for the binary cube, 2n for the ternary one).
inline std::int64_t min_edge_boundary(int base, int n, std::int64_t m) {
  std::int64_t nv = detail::iso_vertex_count(base, n);
  if (m < 2 || m > nv)
    throw std::invalid_argument("min_edge_boundary: m out of range 2.." + std::to_string(nv));
  std::int64_t degree = (base == 2) ? n : 2 * n;
  return degree * m - 2 * f_sum(0, m, base);
}

struct IsoProfile {
  int base = 2;
  int n = 1;
  struct Entry {
    std::int64_t m;
    std::int64_t e_max;
    std::int64_t b_min;
  };
  std::vector<Entry> entries;  // m = 2 .. base^n
};

inline IsoProfile iso_profile(int base, int n) {
  IsoProfile out{base, n, {}};
  std::int64_t nv = detail::iso_vertex_count(base, n);
  out.entries.reserve(static_cast<std::size_t>(nv - 1));
  for (std::int64_t m = 2; m <= nv; ++m)
    out.entries.push_back({m, max_induced_edges(base, n, m), min_edge_boundary(base, n, m)});
  return out;
}

// Exhaustive maximum of e(H) over all m-subsets of g. Independent of the
// digit-sum formulas; used to verify them. Needs |V| <= 63 and the number of
// candidate sets below the cap.
inline std::int64_t oracle_max_induced_edges(const Graph& g, int m,
                                             std::int64_t candidate_cap = 100'000'000) {
  int n = g.vertex_count();
  if (n > 63) throw capacity_error("oracle_max_induced_edges: needs at most 63 vertices");
  if (m < 1 || m > n) throw std::invalid_argument("oracle_max_induced_edges: m out of range");
  // C(n, m) against the cap, computed without overflow.
  double log_count = 0;
  for (int i = 0; i < m; ++i)
    log_count += std::log2(static_cast<double>(n - i)) - std::log2(static_cast<double>(i + 1));
  if (log_count > std::log2(static_cast<double>(candidate_cap)))
    throw capacity_error("oracle_max_induced_edges: C(" + std::to_string(n) + "," +
                         std::to_string(m) + ") exceeds the candidate cap " +
                         std::to_string(candidate_cap));

  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::int64_t best = 0;
  std::uint64_t subset = (std::uint64_t{1} << m) - 1;
  std::uint64_t limit = (n == 63) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  while (subset < limit) {
    std::int64_t twice_edges = 0;
    std::uint64_t rest = subset;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice_edges += std::popcount(adj[v] & subset);
    }
    if (twice_edges / 2 > best) best = twice_edges / 2;
    // Gosper's hack: next subset with the same popcount.
    std::uint64_t c = subset & (~subset + 1);
    std::uint64_t r = subset + c;
    if (r == 0) break;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return best;
}

}  // namespace relcube
