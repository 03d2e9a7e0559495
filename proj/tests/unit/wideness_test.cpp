#include "colnum/admissibility.hpp"
#include "colnum/cover.hpp"
#include "colnum/distance.hpp"
#include "colnum/exact.hpp"
#include "colnum/generate.hpp"
#include "colnum/reach.hpp"
#include "colnum/wideness.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace colnum;
namespace ts = colnum::testsupport;

TEST_CASE("covers on edgeless graphs are singleton clusters") {
  auto g = Graph::from_edges(4, {});
  auto cover = neighborhood_cover(g, VertexOrder::identity(4), 1);
  CHECK(cover.clusters.size() == 4);
  CHECK(cover.degree == 1);
  CHECK(cover.measured_radius == 0);
}

TEST_CASE("cover of a clique spans everything through the minimum") {
  auto g = make_clique(4);
  auto cover = neighborhood_cover(g, VertexOrder::identity(4), 1);
  CHECK(cover.degree <= 4);
  bool full = false;
  for (const auto& cl : cover.clusters) full |= (cl.size() == 4);
  CHECK(full);
}

TEST_CASE("covers verify on paths and random fixtures") {
  auto p7 = make_path(7);
  auto id = VertexOrder::identity(7);
  auto cover = neighborhood_cover(p7, id, 1);
  CHECK(cover.degree <= wcol_of_order(p7, id, Radius(2)));

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = ts::random_connected(9, seed * 7);
    auto pi = default_order(g, Radius(2));
    for (int r = 1; r <= 2; ++r) {
      auto cov = neighborhood_cover(g, pi, r);
      // independent re-check: every ball inside some cluster
      DistanceOracle oracle(g);
      for (int u = 0; u < g.vertex_count(); ++u) {
        auto ball = oracle.ball(u, r);
        bool inside = false;
        for (const auto& cl : cov.clusters)
          inside |= std::includes(cl.begin(), cl.end(), ball.begin(), ball.end());
        CHECK(inside);
      }
      CHECK(cov.measured_radius <= 2 * r);
    }
  }
}

TEST_CASE("trace counting on named fixtures") {
  auto edgeless = Graph::from_edges(4, {});
  std::vector<int> all{0, 1, 2, 3};
  CHECK(neighborhood_complexity(edgeless, all, 1).distinct == 1);

  auto star = make_star(5);
  std::vector<int> leaves{1, 2, 3, 4, 5};
  CHECK(neighborhood_complexity(star, leaves, 1).distinct == 2);

  auto p5 = make_path(5);
  std::vector<int> a5{0, 1, 2, 3, 4};
  auto rep = neighborhood_complexity(p5, a5, 1);
  CHECK(rep.within);
}

TEST_CASE("reidl bound holds with exact wcol on the tiny corpus") {
  for (int n = 4; n <= 6; ++n)
    for (size_t gi = 0; gi < ts::connected_corpus(n).size(); gi += 6) {
      const auto& g = ts::connected_corpus(n)[gi];
      std::vector<int> A;
      for (int v = 0; v < n; ++v) A.push_back(v);
      for (int r = 1; r <= 2; ++r) {
        auto exact = exact_parameter(g, 2 * r, Measure::wcol);
        auto rep = neighborhood_complexity(g, A, r, &exact.witness);
        CHECK(rep.wcol_2r == exact.value);
        CHECK(rep.within);
      }
    }
}

TEST_CASE("uqw on an edgeless graph needs no deletions") {
  auto g = Graph::from_edges(5, {});
  std::vector<int> A{0, 1, 2, 3, 4};
  auto res = uqw_extract(g, A, 2, 5, 0);
  REQUIRE(std::holds_alternative<WidenessCertificate>(res));
  auto& cert = std::get<WidenessCertificate>(res);
  CHECK(cert.B.size() == 5);
  CHECK(cert.S.empty());
}

TEST_CASE("uqw deletes the star center to free the leaves") {
  auto g = make_star(9);
  std::vector<int> leaves;
  for (int v = 0; v < 9; ++v) leaves.push_back(v);
  auto res = uqw_extract(g, leaves, 2, 9, 1);
  REQUIRE(std::holds_alternative<WidenessCertificate>(res));
  auto& cert = std::get<WidenessCertificate>(res);
  CHECK(cert.S == std::vector<int>{9});
  CHECK(cert.B.size() == 9);
  CHECK(cert.verify(g));
}

TEST_CASE("uqw greedy far set on the path") {
  auto g = make_path(9);
  std::vector<int> A;
  for (int v = 0; v < 9; ++v) A.push_back(v);
  auto res = uqw_extract(g, A, 2, 3, 0);
  REQUIRE(std::holds_alternative<WidenessCertificate>(res));
  CHECK(std::get<WidenessCertificate>(res).B == std::vector<int>{0, 3, 6});
}

TEST_CASE("uqw failures report the best found") {
  auto g = make_clique(6);
  std::vector<int> A{0, 1, 2, 3, 4, 5};
  auto res = uqw_extract(g, A, 1, 4, 0);
  REQUIRE(std::holds_alternative<WidenessFailure>(res));
  CHECK(std::get<WidenessFailure>(res).best_b == 1);
}

TEST_CASE("uqw certificates survive independent verification") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = ts::random_connected(9, seed * 5);
    std::vector<int> A;
    for (int v = 0; v < 9; v += 2) A.push_back(v);
    auto res = uqw_extract(g, A, 2, 2, 2);
    if (auto* cert = std::get_if<WidenessCertificate>(&res)) {
      std::string why;
      CHECK_MESSAGE(cert->verify(g, &why), why);
    }
  }
}

TEST_CASE("the nadara size condition succeeds at its smallest desk-scale points") {
  // star: r=2, order center-first has wcol_2 = 2 = c; |A| >= 4(2cm)^{c+1}
  // with m=2 needs 2048 leaves
  {
    int c = 2, m = 2;
    long long need = 4;
    for (int i = 0; i < c + 1; ++i) need *= 2LL * c * m;
    auto g = make_star(static_cast<int>(need));
    std::vector<int> A;
    for (int v = 0; v < need; ++v) A.push_back(v);
    auto res = uqw_extract(g, A, 2, m, c);
    REQUIRE(std::holds_alternative<WidenessCertificate>(res));
    CHECK(std::get<WidenessCertificate>(res).verify(g));
  }
  // path: r=1, c = wcol_1 = 2, m=2 at the same threshold
  {
    int c = 2, m = 2;
    long long need = 4;
    for (int i = 0; i < c + 1; ++i) need *= 2LL * c * m;
    auto g = make_path(static_cast<int>(need));
    std::vector<int> A;
    for (int v = 0; v < need; ++v) A.push_back(v);
    auto res = uqw_extract(g, A, 1, m, c);
    REQUIRE(std::holds_alternative<WidenessCertificate>(res));
  }
}
