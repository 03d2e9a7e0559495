#include "colnum/augmentation.hpp"
#include "colnum/generate.hpp"
#include "colnum/reach.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace colnum;
namespace ts = colnum::testsupport;

TEST_CASE("degeneracy orientation of stars, cliques and the empty graph") {
  auto star = degeneracy_orientation(make_star(5));
  CHECK(star.max_out_degree() == 1);
  for (int leaf = 0; leaf < 5; ++leaf) CHECK(star.has_arc(leaf, 5));

  auto k4 = degeneracy_orientation(make_clique(4));
  CHECK(k4.arc_count() == 6);
  CHECK(k4.max_out_degree() == 3);

  CHECK(degeneracy_orientation(Graph::from_edges(4, {})).arc_count() == 0);
}

TEST_CASE("path augmentation stays fraternal-arc free") {
  auto seq = fraternal_augment(make_path(6), 3);
  CHECK(seq.max_out_degree.back() == 1);
  CHECK(seq.levels[0].arc_count() == seq.top().arc_count());
}

TEST_CASE("four-cycle gains exactly the antipodal arc at level two") {
  auto c4 = make_cycle(4);
  auto id = VertexOrder::identity(4);
  auto seq = fraternal_augment(c4, 2, &id);
  // back-orientation of the identity order: d is the only double source
  CHECK(seq.levels[0].arc_count() == 4);
  CHECK(seq.top().arc_count() == 5);
  bool a_c = seq.w.finite(0, 2) || seq.w.finite(2, 0);
  CHECK(a_c);
  int w = seq.w.finite(0, 2) ? seq.w.weight(0, 2) : seq.w.weight(2, 0);
  CHECK(w == 2);
}

TEST_CASE("triangles add no fraternal arcs") {
  auto seq = fraternal_augment(make_clique(3), 3);
  CHECK(seq.top().arc_count() == 3);
}

TEST_CASE("augmentation levels nest and carry exact weights") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = ts::random_sparse(12, 16, seed);
    auto seq = fraternal_augment(g, 3);
    for (int i = 1; i < 3; ++i)
      for (auto [u, v] : seq.levels[i - 1].arcs()) CHECK(seq.levels[i].has_arc(u, v));
    for (auto [u, v] : seq.top().arcs()) {
      int w = seq.w.weight(u, v);
      CHECK(w >= 1);
      CHECK(w <= 3);
      CHECK(seq.levels[w - 1].has_arc(u, v));
      if (w > 1) {
        // a level-w arc joins a pair untouched at every lower level
        CHECK_FALSE(seq.levels[w - 2].has_arc(u, v));
        CHECK_FALSE(seq.levels[w - 2].has_arc(v, u));
      }
    }
  }
}

TEST_CASE("fraternity function from an order validates and matches reach levels") {
  auto k3 = make_clique(3);
  auto w3 = fraternity_from_order(k3, VertexOrder::identity(3), 2);
  int ones = 0;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v && w3.finite(u, v)) {
        CHECK(w3.weight(u, v) == 1);
        ++ones;
      }
  CHECK(ones == 3);

  auto p5 = make_path(5);
  auto wp = fraternity_from_order(p5, VertexOrder::identity(5), 2);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v && wp.finite(u, v)) CHECK(wp.weight(u, v) == 1);

  auto c4 = make_cycle(4);
  auto wc = fraternity_from_order(c4, VertexOrder::identity(4), 2);
  wc.validate(c4);  // full invariant scan
}

TEST_CASE("greedy augmentation output is always a valid fraternity function") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = ts::random_sparse(10, 14, seed * 3);
    auto seq = fraternal_augment(g, 3);
    CHECK_NOTHROW(seq.w.validate(g));
  }
}

TEST_CASE("augmentation trichotomy covers every short path") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = ts::random_sparse(7, 9, seed * 5);
    int r = 3;
    auto seq = fraternal_augment(g, r);
    // weighted closure reachability
    auto wdist = [&](int u, int v) {
      std::vector<int> dist(g.vertex_count(), r + 1);
      dist[u] = 0;
      for (int round = 0; round < g.vertex_count(); ++round)
        for (auto [x, y] : seq.top().arcs())
          if (dist[x] + seq.w.weight(x, y) < dist[y]) dist[y] = dist[x] + seq.w.weight(x, y);
      return dist[v];
    };
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        for (const auto& path : ts::all_paths(g, u, v, r)) {
          bool forward = wdist(u, v) <= r;
          bool backward = wdist(v, u) <= r;
          bool sink = false;
          for (size_t i = 1; i + 1 < path.size(); ++i)
            sink |= (wdist(u, path[i]) <= r && wdist(v, path[i]) <= r);
          CHECK((forward || backward || sink));
        }
  }
}

TEST_CASE("orders from augmentations respect the certified bound") {
  auto p6 = make_path(6);
  auto seqp = fraternal_augment(p6, 2);
  auto rp = order_from_augmentation(p6, seqp);
  CHECK(rp.delta == 1);
  CHECK(rp.certified_bound == 16);
  CHECK(rp.achieved_wcol <= 3);

  auto star = make_star(5);
  auto seqs = fraternal_augment(star, 3);
  auto rs = order_from_augmentation(star, seqs);
  CHECK(rs.certified_bound == 36);
  CHECK(rs.achieved_wcol <= 2);

  auto k4 = make_clique(4);
  auto seqk = fraternal_augment(k4, 1);
  auto rk = order_from_augmentation(k4, seqk);
  CHECK(rk.delta == 3);
  CHECK(rk.certified_bound == 36);
  CHECK(rk.achieved_wcol == 4);
}

TEST_CASE("augmentation bound holds across a random corpus") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = ts::random_sparse(14, 20, seed * 17);
    for (int r = 2; r <= 3; ++r) {
      auto seq = fraternal_augment(g, r);
      auto res = order_from_augmentation(g, seq);
      CHECK(res.achieved_wcol <= res.certified_bound);
      CHECK(res.achieved_wcol == wcol_of_order(g, res.order, r));
    }
  }
}

TEST_CASE("edgeless graphs take the degenerate augmentation path") {
  auto g = Graph::from_edges(5, {});
  auto seq = fraternal_augment(g, 2);
  auto res = order_from_augmentation(g, seq);
  CHECK(res.certified_bound == 1);
  CHECK(res.achieved_wcol == 1);
}
