#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "relcube/isoperimetry.hpp"
#include "relcube/percolation.hpp"
#include "relcube/product_family.hpp"

#include "oracles.hpp"

using namespace relcube;

TEST_CASE("digit sums") {
  REQUIRE(digit_sum(11, 2) == 3);
  REQUIRE(digit_sum(5, 3) == 3);
  REQUIRE(digit_sum(0, 2) == 0);
  REQUIRE(digit_sum(0, 3) == 0);
  REQUIRE(digit_sum(26, 3) == 6);  // 222
}

TEST_CASE("f_sum: closed form vs linear sum") {
  REQUIRE(f_sum(0, 4, 2) == 4);
  REQUIRE(f_sum(0, 3, 3) == 3);
  for (int base : {2, 3})
    for (std::int64_t l : {0, 1, 7, 100, 729})
      for (std::int64_t len : {0, 1, 5, 64, 300}) {
        CAPTURE(base, l, len);
        REQUIRE(f_sum(l, l + len, base) == f_sum_linear(l, l + len, base));
      }
  REQUIRE_THROWS_AS(f_sum(5, 4, 2), std::invalid_argument);
}

TEST_CASE("digit reflection identity f(l,l+k) + f(2^r-l-k, 2^r-l) = rk") {
  for (int r = 1; r <= 10; ++r) {
    std::int64_t top = std::int64_t{1} << r;
    for (std::int64_t l = 0; l <= top; ++l)
      for (std::int64_t k = 0; l + k <= top; ++k) {
        if (f_sum(l, l + k, 2) + f_sum(top - l - k, top - l, 2) != r * k) {
          CAPTURE(r, l, k);
          FAIL("reflection identity violated");
        }
      }
  }
  SUCCEED();
}

TEST_CASE("shift lemma f(l,l+k) >= f(0,k) + k, both bases") {
  for (int base : {2, 3})
    for (std::int64_t l = 1; l <= 512; ++l)
      for (std::int64_t k = 1; k <= l; ++k)
        if (f_sum(l, l + k, base) < f_sum(0, k, base) + k) {
          CAPTURE(base, l, k);
          FAIL("shift lemma violated");
        }
  SUCCEED();
}

TEST_CASE("boundary and induced-edge formulas on small cases") {
  REQUIRE(min_edge_boundary(2, 3, 4) == 4);       // a square face of the cube
  REQUIRE(max_induced_edges(2, 3, 4) == 4);
  REQUIRE(min_edge_boundary(3, 2, 3) == 6);       // one triangle of the ternary square
  REQUIRE(max_induced_edges(3, 2, 3) == 3);

  // Subcube prefixes: f(0, 2^k) = k 2^{k-1}, boundary 2^k (n-k).
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      std::int64_t m = std::int64_t{1} << k;
      REQUIRE(max_induced_edges(2, n, m) == static_cast<std::int64_t>(k) * (m / 2));
      REQUIRE(min_edge_boundary(2, n, m) == m * (n - k));
    }
  REQUIRE(min_edge_boundary(2, 4, 16) == 0);  // whole graph has empty boundary
  REQUIRE(min_edge_boundary(3, 2, 9) == 0);
  REQUIRE_THROWS_AS(min_edge_boundary(2, 3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(min_edge_boundary(2, 3, 9), std::invalid_argument);
}

TEST_CASE("ceiling-log upper bounds for induced edges") {
  auto ceil_log = [](std::int64_t k, int base) {
    int r = 0;
    std::int64_t v = 1;
    while (v < k) {
      v *= base;
      ++r;
    }
    return r;
  };
  for (std::int64_t k = 1; k <= 1 << 10; ++k)
    REQUIRE(2 * max_induced_edges(2, 10, k) <= k * ceil_log(k, 2));
  for (std::int64_t k = 1; k <= 729; ++k)
    REQUIRE(max_induced_edges(3, 6, k) <= k * ceil_log(k, 3));
}

TEST_CASE("prefix sets realize f(0,m) in the built graphs") {
  // Induced edges of {0..m-1}: vertex i adds exactly h(i) of them.
  for (int base : {2, 3}) {
    int n = base == 2 ? 12 : 7;
    Graph g = build(ProductSpec{base == 2 ? BaseKind::k2 : BaseKind::k3, n});
    std::int64_t running = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      int below = 0;
      for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w)
        below += *w < v;
      running += below;
      if (v >= 1) REQUIRE(running == f_sum(0, v + 1, base));
    }
  }
}

TEST_CASE("exhaustive oracle agrees with the digit-sum optimum") {
  Graph q3 = build(ProductSpec{BaseKind::k2, 3});
  REQUIRE(oracle_max_induced_edges(q3, 4) == 4);
  REQUIRE(oracle_max_induced_edges(q3, 4) == oracles::naive_max_induced_edges(q3, 4));

  Graph q4 = build(ProductSpec{BaseKind::k2, 4});
  for (int m = 2; m <= 16; ++m) {
    CAPTURE(m);
    REQUIRE(oracle_max_induced_edges(q4, m) == max_induced_edges(2, 4, m));
  }
  Graph t2 = build(ProductSpec{BaseKind::k3, 2});
  for (int m = 2; m <= 9; ++m) {
    CAPTURE(m);
    REQUIRE(oracle_max_induced_edges(t2, m) == max_induced_edges(3, 2, m));
    REQUIRE(oracle_max_induced_edges(t2, m) == oracles::naive_max_induced_edges(t2, m));
  }
  REQUIRE_THROWS_AS(oracle_max_induced_edges(q4, 8, 100), capacity_error);
}

TEST_CASE("boundary identity b(S) = d|S| - 2e(S) for regular graphs") {
  Graph q4 = build(ProductSpec{BaseKind::k2, 4});
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + static_cast<int>(rng.next_below(14));
    // Random m-subset.
    std::vector<int> verts(q4.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    for (int i = 0; i < m; ++i)
      std::swap(verts[i], verts[i + rng.next_below(static_cast<std::uint32_t>(16 - i))]);
    std::vector<char> in(q4.vertex_count(), 0);
    for (int i = 0; i < m; ++i) in[verts[i]] = 1;
    int induced = 0, boundary = 0;
    for (const auto& [u, v] : q4.edges()) {
      if (in[u] && in[v]) ++induced;
      if (in[u] != in[v]) ++boundary;
    }
    REQUIRE(boundary == 4 * m - 2 * induced);
  }
}

TEST_CASE("profile shape") {
  IsoProfile prof = iso_profile(2, 4);
  REQUIRE(prof.entries.size() == 15);
  for (std::size_t i = 1; i < prof.entries.size(); ++i)
    REQUIRE(prof.entries[i].e_max >= prof.entries[i - 1].e_max);
  REQUIRE(prof.entries.back().b_min == 0);
  for (const auto& e : prof.entries) REQUIRE(e.b_min >= 0);
}
