#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "relcube/percolation.hpp"
#include "relcube/poly_roots.hpp"
#include "relcube/reliability.hpp"
#include "relcube/uor.hpp"

#include "oracles.hpp"

using namespace relcube;

namespace {
std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("cycle coefficients") {
  auto c = reliability_coefficients(Graph::cycle(4));
  REQUIRE(c.s == big({0, 0, 0, 4, 1}));
  REQUIRE(evaluate(c, 0.5) == Catch::Approx(0.3125).epsilon(1e-12));
  REQUIRE(evaluate(c, 1.0) == 1.0);
  REQUIRE(evaluate(c, 0.0) == 0.0);
}

TEST_CASE("cap errors name the cap") {
  Graph big_graph = Graph::complete(8);  // m = 28
  try {
    reliability_coefficients(big_graph);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    REQUIRE(std::string(e.what()).find("25") != std::string::npos);
  }
  REQUIRE_NOTHROW(reliability_coefficients(Graph::complete(7), 21));
}

TEST_CASE("reference rows for near-complete graphs") {
  // K5 minus one edge is the unique best (5,9) graph.
  Graph k5_minus(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto c = reliability_coefficients(k5_minus);
  REQUIRE(c.s == big({0, 0, 0, 0, 75, 111, 82, 36, 9, 1}));

  auto k5 = reliability_coefficients(Graph::complete(5));
  REQUIRE(k5.s == big({0, 0, 0, 0, 125, 222, 205, 120, 45, 10, 1}));
}

TEST_CASE("cross-checks tie the enumeration to independent counts") {
  for (const Graph& g : {Graph::complete(5), Graph::cycle(6), Graph::path(6),
                         build(ProductSpec{BaseKind::p3, 2})}) {
    auto c = reliability_coefficients(g);
    auto check = cross_check(g, c);
    CAPTURE(g.vertex_count(), g.edge_count());
    REQUIRE(check.trees_ok);
    REQUIRE(check.cuts_ok);
    REQUIRE(check.top_ok);
  }
  // A tree: every edge is a bridge, s_{m-1} = 0, one spanning tree.
  Graph tree = Graph::path(6);
  auto c = reliability_coefficients(tree);
  REQUIRE(c.s[5] == 1);
  REQUIRE(c.s[4] == 0);
  auto check = cross_check(tree, c);
  REQUIRE(check.bridges == 5);
  REQUIRE(check.all_ok());
  // Disconnected graph: all-zero coefficients.
  Graph split(4, {{0, 1}, {2, 3}});
  auto cs = reliability_coefficients(split);
  REQUIRE(cs.s == big({0, 0, 0}));
  REQUIRE(cross_check(split, cs).all_ok());
}

TEST_CASE("K7 tail coefficients") {
  auto c = reliability_coefficients(Graph::complete(7), 21);
  REQUIRE(c.s[6] == 16807);
  REQUIRE(c.s[20] == 21);
  REQUIRE(c.s[15] == 54257);  // C(21,15) minus the 7 one-vertex cuts
  REQUIRE(cross_check(Graph::complete(7), c).all_ok());
}

TEST_CASE("evaluate is a reliability function: monotone, in [0,1]") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 5 + static_cast<int>(rng.next_below(2));
    Graph g = sample_gnm(n, 10 + static_cast<int>(rng.next_below(4)), rng.next_u64());
    auto c = reliability_coefficients(g);
    double prev = 0;
    for (int i = 0; i <= 1000; ++i) {
      double r = evaluate(c, i / 1000.0);
      REQUIRE(r >= -1e-12);
      REQUIRE(r <= 1 + 1e-12);
      REQUIRE(r >= prev - 1e-9);
      prev = r;
    }
  }
}

TEST_CASE("sum of coefficients is at most 2^m, equality iff all subsets span") {
  // Single vertex: the one (empty) spanning subgraph is connected.
  auto one = reliability_coefficients(Graph(1, {}));
  REQUIRE(one.s == big({1}));
  // K2 already misses equality: the empty subset is disconnected.
  auto k2 = reliability_coefficients(Graph::complete(2));
  REQUIRE(k2.s == big({0, 1}));
  for (const Graph& g : {Graph::cycle(4), Graph::complete(4), Graph::path(3),
                         Graph::complete(2)}) {
    auto c = reliability_coefficients(g);
    BigInt sum = 0;
    for (const auto& x : c.s) sum += x;
    REQUIRE(sum < (BigInt(1) << g.edge_count()));
  }
}

TEST_CASE("monte carlo agrees with exact evaluation") {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 5 + static_cast<int>(rng.next_below(3));
    int m = std::min(n * (n - 1) / 2, 10 + static_cast<int>(rng.next_below(7)));
    Graph g = sample_gnm(n, m, rng.next_u64());
    auto c = reliability_coefficients(g);
    double p = 0.35 + 0.1 * static_cast<double>(rng.next_below(4));
    double exact = evaluate(c, p);
    auto mc = estimate_connectivity(g, p, 20000, rng.next_u64());
    INFO("n=" << n << " m=" << m << " p=" << p);
    REQUIRE(std::abs(mc.estimate - exact) <= 4 * std::max(mc.stderr_of_mean, 1e-4));
  }
}

TEST_CASE("compare: identical and dominance") {
  auto c4 = reliability_coefficients(Graph::cycle(4));
  REQUIRE(compare(c4, c4).verdict == CompareVerdict::identical);

  // K5 minus an edge dominates the (5,9) graph with a pendant-ish structure.
  Graph best(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  Graph worse(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  auto a = reliability_coefficients(best);
  auto b = reliability_coefficients(worse);
  auto cmp = compare(a, b);
  if (a.s == b.s) {
    REQUIRE(cmp.verdict == CompareVerdict::identical);
  } else {
    REQUIRE((cmp.verdict == CompareVerdict::a_dominates ||
             cmp.verdict == CompareVerdict::b_dominates));
  }
  REQUIRE_THROWS_AS(compare(a, c4), std::invalid_argument);
}

TEST_CASE("compare: the (6,11) crossover at 1 - sqrt(2)/2") {
  ReliabilityCoefficients a{6, 11, big({0, 0, 0, 0, 0, 225, 368, 309, 163, 55, 11, 1})};
  ReliabilityCoefficients b{6, 11, big({0, 0, 0, 0, 0, 224, 370, 310, 163, 55, 11, 1})};
  auto cmp = compare(a, b);
  REQUIRE(cmp.verdict == CompareVerdict::crossover);
  REQUIRE(cmp.crossover_points.size() == 1);
  REQUIRE(cmp.crossover_points[0] == Catch::Approx(1.0 - std::sqrt(2.0) / 2.0).margin(1e-9));
  // a is better below the crossover, b above.
  double below = evaluate(a, 0.2) - evaluate(b, 0.2);
  double above = evaluate(a, 0.4) - evaluate(b, 0.4);
  REQUIRE(below > 0);
  REQUIRE(above < 0);
}

TEST_CASE("power-basis conversion agrees with direct basis evaluation") {
  SplitMix64 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 3 + static_cast<int>(rng.next_below(10));
    std::vector<BigInt> d(m + 1);
    for (auto& x : d)
      x = static_cast<long long>(rng.next_below(41)) - 20;
    auto power = bernstein_like_to_power(d);
    for (int k = 1; k < 8; ++k) {
      BigInt num = k, den = 8;
      REQUIRE(sign_power_at(power, num, den) == sign_bernstein_at(d, num, den));
    }
  }
}

TEST_CASE("root isolation handles exact dyadic and multiple roots") {
  // (2p - 1)^2 (p - 1/4): crossing at 1/4, touch at 1/2.
  // Expand: (4p^2 - 4p + 1)(4p - 1) / 4 -> use integer coeffs (16p^3 - 20p^2 + 8p - 1).
  std::vector<BigInt> poly = {BigInt(-1), BigInt(8), BigInt(-20), BigInt(16)};
  auto scan = isolate_roots_01(poly);
  REQUIRE(scan.crossings.size() == 1);
  REQUIRE(scan.crossings[0] == Catch::Approx(0.25).margin(1e-9));
  REQUIRE(scan.touches.size() == 1);
  REQUIRE(scan.touches[0] == Catch::Approx(0.5).margin(1e-9));

  // Roots at the endpoints are not reported.
  std::vector<BigInt> ends = {BigInt(0), BigInt(1), BigInt(-1)};  // p(1-p)
  auto scan2 = isolate_roots_01(ends);
  REQUIRE(scan2.crossings.empty());
  REQUIRE(scan2.touches.empty());

  // Three simple roots at 1/8, 1/2 (exactly dyadic), 3/4.
  // 64 (p-1/8)(p-1/2)(p-3/4) = 64p^3 - 88p^2 + 34p - 3
  std::vector<BigInt> three = {BigInt(-3), BigInt(34), BigInt(-88), BigInt(64)};
  auto scan3 = isolate_roots_01(three);
  REQUIRE(scan3.crossings.size() == 3);
  REQUIRE(scan3.crossings[0] == Catch::Approx(0.125).margin(1e-9));
  REQUIRE(scan3.crossings[1] == Catch::Approx(0.5).margin(1e-9));
  REQUIRE(scan3.crossings[2] == Catch::Approx(0.75).margin(1e-9));
}
