#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "relcube/graph.hpp"
#include "relcube/percolation.hpp"
#include "relcube/product_family.hpp"
#include "relcube/rng.hpp"

#include "oracles.hpp"

using namespace relcube;

TEST_CASE("graph construction validates and normalizes") {
  Graph g(4, {{2, 0}, {1, 0}, {3, 2}});
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {2, 3}});
  REQUIRE(g.degree(0) == 2);
  REQUIRE(g.has_edge(0, 2));
  REQUIRE_FALSE(g.has_edge(1, 3));

  REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("text format round trips and sorts edges") {
  Graph g(5, {{4, 1}, {0, 3}, {2, 1}});
  std::ostringstream out;
  g.write_text(out);
  REQUIRE(out.str() == "5 3\n0 3\n1 2\n1 4\n");
  Graph back = Graph::from_text(out.str());
  REQUIRE(back == g);
  REQUIRE_THROWS_AS(Graph::from_text("3 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("erdos-gallai matches known sequences") {
  REQUIRE(is_graphic({3, 3, 3, 3}));
  REQUIRE_FALSE(is_graphic({3, 1}));
  REQUIRE(is_graphic({}));
  REQUIRE_FALSE(is_graphic({3, 3, 3}));  // odd sum
  REQUIRE_THROWS_AS(is_graphic({1, 2}), std::invalid_argument);
}

TEST_CASE("erdos-gallai agrees with exhaustive realization search") {
  // The (5,4,4,3,2,2,2) sequence plus random sequences on 7 vertices.
  std::vector<int> target{5, 4, 4, 3, 2, 2, 2};
  REQUIRE(is_graphic(target) == oracles::degree_sequence_realizable(target));

  SplitMix64 rng(20240521);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<int> seq(6);
    for (int& d : seq) d = static_cast<int>(rng.next_below(6));
    std::sort(seq.rbegin(), seq.rend());
    CAPTURE(seq);
    REQUIRE(is_graphic(seq) == oracles::degree_sequence_realizable(seq));
  }
}

TEST_CASE("connected components") {
  auto singletons = connected_components(Graph::edgeless(4));
  REQUIRE(singletons.count() == 4);

  auto c5 = connected_components(Graph::cycle(5));
  REQUIRE(c5.count() == 1);
  REQUIRE(c5.parts[0].size() == 5);

  // Cube with every edge at vertex 7 removed splits off {7}.
  Graph q3 = build(ProductSpec{BaseKind::k2, 3});
  std::vector<Graph::Edge> kept;
  for (const auto& e : q3.edges())
    if (e.first != 7 && e.second != 7) kept.push_back(e);
  auto parts = connected_components(Graph(8, kept));
  REQUIRE(parts.count() == 2);
  REQUIRE(parts.parts[parts.label[7]] == std::vector<int>{7});
  REQUIRE(parts.parts[parts.label[0]].size() == 7);
}

TEST_CASE("spanning trees of complete graphs and basics") {
  REQUIRE(count_spanning_trees(Graph::complete(5)) == 125);
  REQUIRE(count_spanning_trees(Graph::complete(6)) == 1296);
  REQUIRE(count_spanning_trees(Graph::complete(7)) == 16807);
  for (int n = 3; n <= 7; ++n) {
    BigInt expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    REQUIRE(count_spanning_trees(Graph::complete(n)) == expect);
  }
  REQUIRE(count_spanning_trees(Graph::cycle(6)) == 6);
  REQUIRE(count_spanning_trees(Graph::path(5)) == 1);
  REQUIRE(count_spanning_trees(Graph(1, {})) == 1);
}

TEST_CASE("spanning-tree count is zero exactly for disconnected graphs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(4));
    int max_m = n * (n - 1) / 2;
    int m = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(max_m + 1)));
    Graph g = sample_gnm(n, m, rng.next_u64());
    bool connected = connected_components(g).count() == 1;
    CAPTURE(n, m);
    REQUIRE((count_spanning_trees(g) > 0) == connected);
  }
}

TEST_CASE("bridge counting") {
  REQUIRE(count_bridges(Graph::path(6)) == 5);
  REQUIRE(count_bridges(Graph::cycle(6)) == 0);
  // Two triangles joined by one edge: exactly that edge is a bridge.
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  REQUIRE(count_bridges(g) == 1);
  // Every tree on n vertices has n-1 bridges.
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  REQUIRE(count_bridges(star) == 4);
}

TEST_CASE("cartesian products") {
  Graph k2 = Graph::complete(2);
  Graph c4 = cartesian_product(k2, k2);
  REQUIRE(c4.vertex_count() == 4);
  REQUIRE(c4.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

  Graph q3 = cartesian_product(cartesian_product(k2, k2), k2);
  REQUIRE(q3.vertex_count() == 8);
  REQUIRE(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) REQUIRE(q3.degree(v) == 3);

  Graph grid = cartesian_product(Graph::path(3), Graph::path(3));
  REQUIRE(grid.vertex_count() == 9);
  REQUIRE(grid.edge_count() == 12);

  REQUIRE_THROWS_AS(cartesian_product(Graph::complete(100), Graph::complete(100), 5000),
                    capacity_error);
}

TEST_CASE("handshake lemma on generated graphs") {
  for (const Graph& g : {build(ProductSpec{BaseKind::p3, 3}), build(ProductSpec{BaseKind::k3, 2}),
                         sample_gnm(12, 20, 99)}) {
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    REQUIRE(sum == 2LL * g.edge_count());
  }
}
