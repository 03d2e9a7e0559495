#include <algorithm>

#include "colnum/coloring.hpp"
#include "colnum/distance.hpp"
#include "colnum/generate.hpp"
#include "colnum/io.hpp"
#include "colnum/minor_density.hpp"
#include "colnum/order.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace colnum;
namespace ts = colnum::testsupport;

TEST_CASE("dimacs parsing builds the stated path") {
  auto g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("empty document parses to the empty graph") {
  auto g = parse_graph("");
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("self-loops are rejected with a line number") {
  CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 1\n"),
                       doctest::Contains("self-loop"), Error);
  CHECK_THROWS_AS(parse_graph("a a\n"), ParseError);
}

TEST_CASE("malformed lines name the offending line") {
  try {
    parse_graph("p edge 2 1\ne 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("duplicate edges collapse") {
  auto g = parse_graph("a b\nb a\na b\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("headerless labels are preserved by first appearance") {
  auto g = parse_graph("x y\ny z\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(0) == "x");
  CHECK(g.label(2) == "z");
}

TEST_CASE("serialization round-trips generated graphs structurally") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = make_random_gnp(8, 0.4, seed);
    auto back = parse_graph(serialize_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    auto dim = parse_graph(serialize_dimacs(g));
    CHECK(dim.vertex_count() == g.vertex_count());
    CHECK(dim.edges() == g.edges());
  }
}

TEST_CASE("generators match their stated sizes") {
  CHECK(make_path(7).vertex_count() == 7);
  CHECK(make_path(7).edge_count() == 6);
  auto grid = make_grid(3, 3);
  CHECK(grid.vertex_count() == 9);
  CHECK(grid.edge_count() == 12);
  CHECK(make_clique(4).edge_count() == 6);
  CHECK(make_star(5).degree(5) == 5);
  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
}

TEST_CASE("random generators are reproducible bit-exactly") {
  auto a = make_random_gnp(12, 0.3, 77);
  auto b = make_random_gnp(12, 0.3, 77);
  CHECK(a.edges() == b.edges());
  auto c = make_bounded_degree_random(12, 3, 5);
  auto d = make_bounded_degree_random(12, 3, 5);
  CHECK(c.edges() == d.edges());
  for (int v = 0; v < 12; ++v) CHECK(c.degree(v) <= 3);
}

TEST_CASE("distance oracle matches paths and cycles") {
  DistanceOracle p5(make_path(5));
  CHECK(p5.dist(0, 4) == 4);
  DistanceOracle c6(make_cycle(6));
  CHECK(c6.dist(0, 3) == 3);
  DistanceOracle two(Graph::from_edges(2, {}));
  CHECK_FALSE(two.dist(0, 1).has_value());
  CHECK_FALSE(two.reachable(0, 1));
}

TEST_CASE("distance oracle satisfies the triangle inequality") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = make_random_gnp(50, 0.08, seed);
    DistanceOracle d(g);
    for (int u = 0; u < 50; ++u)
      for (int v = 0; v < 50; ++v) {
        if (!d.reachable(u, v)) continue;
        for (int w = 0; w < 50; ++w) {
          if (!d.reachable(u, w) || !d.reachable(w, v)) continue;
          CHECK(*d.dist(u, v) <= *d.dist(u, w) + *d.dist(w, v));
        }
      }
  }
}

TEST_CASE("balls and spheres agree with edge relations") {
  auto g = make_grid(3, 3);
  DistanceOracle d(g);
  for (int v = 0; v < 9; ++v) {
    auto ball = d.ball(v, 1);
    CHECK(static_cast<int>(ball.size()) == g.degree(v) + 1);
    for (int u : d.exact_sphere(v, 1)) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("nabla on cliques and paths") {
  auto k4 = nabla_exact(make_clique(4), 0);
  CHECK(k4.density == Rational(3, 2));
  for (int r = 0; r <= 2; ++r) {
    auto p5 = nabla_exact(make_path(5), r);
    CHECK(p5.density == Rational(4, 5));
  }
  auto c6 = nabla_exact(make_cycle(6), 1);
  CHECK(c6.density == Rational(1, 1));
}

TEST_CASE("nabla witness branch sets are disjoint and cover the density") {
  auto g = make_grid(2, 3);
  auto w = nabla_exact(g, 1);
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& set : w.branch_sets)
    for (int v : set) {
      CHECK_FALSE(seen[v]);
      seen[v] = 1;
    }
}

TEST_CASE("nabla cap refuses oversized graphs") {
  CHECK_THROWS_AS(nabla_exact(make_path(9), 1), SizeError);
  CHECK_NOTHROW(nabla_exact(make_path(9), 1, 9));
}

TEST_CASE("nabla monotonicity and subgraph-density lower bound") {
  for (int n = 3; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto g = make_random_gnp(n, 0.5, seed * 31 + n);
      auto r0 = nabla_exact(g, 0);
      if (g.vertex_count() > 0)
        CHECK(Rational(g.edge_count(), g.vertex_count()) <= r0.density);
      auto prev = r0.density;
      for (int r = 1; r <= 2; ++r) {
        auto cur = nabla_exact(g, r).density;
        CHECK(prev <= cur);
        prev = cur;
      }
    }
}

TEST_CASE("greedy chromatic number respects the density bound") {
  // chi(G) <= 2 nabla_0(G) + 1 via first-fit on the degeneracy order
  for (int n = 3; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto g = make_random_gnp(n, 0.45, seed * 13 + n);
      auto nab = nabla_exact(g, 0).density;
      int greedy = first_fit(g, degeneracy_order(g).order).palette();
      CHECK(static_cast<long long>(greedy) * nab.den <= 2 * nab.num + nab.den);
    }
}

TEST_CASE("connected corpus has the known counts") {
  CHECK(ts::connected_corpus(1).size() == 1);
  CHECK(ts::connected_corpus(2).size() == 1);
  CHECK(ts::connected_corpus(3).size() == 2);
  CHECK(ts::connected_corpus(4).size() == 6);
  CHECK(ts::connected_corpus(5).size() == 21);
  CHECK(ts::connected_corpus(6).size() == 112);
}

TEST_CASE("vertex orders serialize and parse") {
  auto pi = random_order(6, 9);
  auto back = VertexOrder::parse(pi.serialize(), 6);
  CHECK(back.permutation() == pi.permutation());
  CHECK_THROWS_AS(VertexOrder::parse("0 1 1", 3), Error);
}

TEST_CASE("degeneracy order has back-degree at most the degeneracy") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = ts::random_connected(8, seed);
    auto res = degeneracy_order(g);
    CHECK(res.degeneracy == ts::degeneracy_value(g));
    for (int pos = 0; pos < 8; ++pos) {
      int v = res.order.vertex_at(pos);
      int back = 0;
      for (int u : g.neighbors(v))
        if (res.order.less(u, v)) ++back;
      CHECK(back <= res.degeneracy);
    }
  }
}
