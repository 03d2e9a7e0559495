#include "colnum/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "colnum/reach.hpp"

namespace colnum {

int Coloring::palette() const {
  int p = 0;
  for (int c : assignment) p = std::max(p, c + 1);
  return p;
}

bool Coloring::proper_on(const Graph& g) const {
  for (auto [u, v] : g.edges())
    if (assignment[u] == assignment[v]) return false;
  return true;
}

std::string Coloring::serialize() const {
  std::ostringstream out;
  for (size_t v = 0; v < assignment.size(); ++v) out << v << " " << assignment[v] << "\n";
  return out.str();
}

Coloring Coloring::parse(const std::string& text, int n) {
  Coloring c;
  c.assignment.assign(n, -1);
  std::istringstream in(text);
  int v, col;
  while (in >> v >> col) {
    if (v < 0 || v >= n || col < 0) throw Error("bad coloring line");
    c.assignment[v] = col;
  }
  for (int x : c.assignment)
    if (x < 0) throw Error("coloring is not total");
  return c;
}

Coloring first_fit(const Graph& g, const VertexOrder& pi) {
  int n = g.vertex_count();
  Coloring c;
  c.assignment.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int v = pi.vertex_at(pos);
    std::vector<char> used(n + 1, 0);
    for (int u : g.neighbors(v))
      if (c.assignment[u] >= 0) used[c.assignment[u]] = 1;
    int col = 0;
    while (used[col]) ++col;
    c.assignment[v] = col;
  }
  return c;
}

Graph reach_graph(const Graph& g, const VertexOrder& pi, Radius r) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int u : weak_reach(g, pi, v, r))
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(n, std::move(edges));
}

Coloring reach_graph_coloring(const Graph& g, const VertexOrder& pi, Radius r) {
  return first_fit(reach_graph(g, pi, r), pi);
}

}  // namespace colnum
