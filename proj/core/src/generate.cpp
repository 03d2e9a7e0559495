#include "colnum/generate.hpp"

#include <algorithm>
#include <cmath>

namespace colnum {

namespace {
void check(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

int as_size(double x, const std::string& what) {
  check(x >= 0 && x == std::floor(x), what + " must be a non-negative integer");
  return static_cast<int>(x);
}
}  // namespace

Graph make_path(int n) {
  check(n >= 0, "path size must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph make_cycle(int n) {
  check(n >= 3, "cycle needs >= 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, std::move(e));
}

Graph make_clique(int n) {
  check(n >= 0, "clique size must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

Graph make_star(int leaves) {
  check(leaves >= 0, "star leaf count must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < leaves; ++i) e.emplace_back(i, leaves);
  return Graph::from_edges(leaves + 1, std::move(e));
}

Graph make_grid(int rows, int cols) {
  check(rows >= 0 && cols >= 0, "grid sizes must be >= 0");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
  check(a >= 0 && b >= 0, "bipartite sizes must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, std::move(e));
}

Graph make_random_gnp(int n, double p, std::uint64_t seed) {
  check(n >= 0, "gnp size must be >= 0");
  check(p >= 0.0 && p <= 1.0, "gnp probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  // Fixed-threshold comparison instead of uniform_real_distribution, whose
  // output is implementation-defined.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rng() >> 11) < threshold) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

Graph make_bounded_degree_random(int n, int max_degree, std::uint64_t seed) {
  check(n >= 0, "size must be >= 0");
  check(max_degree >= 0, "degree bound must be >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  std::vector<int> deg(n, 0);
  std::vector<Edge> e;
  for (auto [u, v] : pairs)
    if (deg[u] < max_degree && deg[v] < max_degree) {
      ++deg[u];
      ++deg[v];
      e.emplace_back(u, v);
    }
  return Graph::from_edges(n, std::move(e));
}

Graph generate(const std::string& family, const std::vector<double>& params,
               std::uint64_t seed) {
  auto want = [&](size_t k) {
    check(params.size() == k,
          family + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "path") {
    want(1);
    return make_path(as_size(params[0], "n"));
  }
  if (family == "cycle") {
    want(1);
    return make_cycle(as_size(params[0], "n"));
  }
  if (family == "clique") {
    want(1);
    return make_clique(as_size(params[0], "n"));
  }
  if (family == "star") {
    want(1);
    return make_star(as_size(params[0], "leaves"));
  }
  if (family == "grid") {
    want(2);
    return make_grid(as_size(params[0], "rows"), as_size(params[1], "cols"));
  }
  if (family == "complete_bipartite") {
    want(2);
    return make_complete_bipartite(as_size(params[0], "a"), as_size(params[1], "b"));
  }
  if (family == "random_gnp") {
    want(2);
    return make_random_gnp(as_size(params[0], "n"), params[1], seed);
  }
  if (family == "bounded_degree_random") {
    want(2);
    return make_bounded_degree_random(as_size(params[0], "n"), as_size(params[1], "d"), seed);
  }
  throw Error("unknown graph family '" + family + "'");
}

}  // namespace colnum
