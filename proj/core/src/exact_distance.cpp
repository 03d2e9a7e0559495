#include "colnum/exact_distance.hpp"

#include "colnum/admissibility.hpp"
#include "colnum/distance.hpp"

namespace colnum {

Graph exact_distance_graph(const Graph& g, int p) {
  if (p < 1) throw Error("p must be >= 1");
  DistanceOracle oracle(g);
  std::vector<Edge> edges;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (oracle.dist(u, v) == std::optional<int>(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Coloring exact_distance_color(const Graph& g, int p, const std::optional<VertexOrder>& pi) {
  if (p < 1 || p % 2 == 0) throw Error("exact-distance coloring needs odd p >= 1");
  Radius radius(2 * p - 1);
  VertexOrder order = pi ? *pi : default_order(g, radius);
  auto rho = reach_graph_coloring(g, order, radius);

  DistanceOracle oracle(g);
  int n = g.vertex_count();
  Coloring out;
  out.assignment.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    int m = v;
    for (int u : oracle.ball(v, p / 2))
      if (order.less(u, m)) m = u;
    out.assignment[v] = rho.assignment[m];
  }
  if (!out.proper_on(exact_distance_graph(g, p)))
    throw ContractViolation("exact-distance coloring is not proper on G^{[#p]}");
  return out;
}

}  // namespace colnum
