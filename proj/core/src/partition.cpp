#include "colnum/partition.hpp"

#include <algorithm>
#include <queue>

#include "colnum/distance.hpp"
#include "colnum/reach.hpp"

namespace colnum {

void ConnectedPartition::validate(const Graph& g) const {
  int n = g.vertex_count();
  std::vector<int> owner(n, -1);
  for (int i = 0; i < part_count(); ++i) {
    const auto& part = parts[i];
    if (part.empty()) throw Error("part " + std::to_string(i) + " is empty");
    for (int v : part) {
      if (v < 0 || v >= n) throw Error("part " + std::to_string(i) + " has a bad vertex");
      if (owner[v] != -1)
        throw Error("vertex " + std::to_string(v) + " appears in parts " +
                    std::to_string(owner[v]) + " and " + std::to_string(i));
      owner[v] = i;
    }
    auto sub = g.induced(part);
    if (!sub.connected())
      throw Error("part " + std::to_string(i) + " does not induce a connected subgraph");
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) throw Error("vertex " + std::to_string(v) + " is uncovered");
}

QuotientResult quotient(const Graph& g, const ConnectedPartition& p) {
  p.validate(g);
  int ell = p.part_count();
  std::vector<int> owner(g.vertex_count());
  for (int i = 0; i < ell; ++i)
    for (int v : p.parts[i]) owner[v] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (owner[u] != owner[v])
      edges.emplace_back(std::min(owner[u], owner[v]), std::max(owner[u], owner[v]));
  QuotientResult res;
  res.quotient = Graph::from_edges(ell, std::move(edges));
  // fill-in back-degree of the natural part order
  auto sizes = strong_reach_sizes(res.quotient, VertexOrder::identity(ell),
                                  Radius::infinity());
  int width = 0;
  for (int s : sizes) width = std::max(width, s - 1);
  res.width = width;
  return res;
}

std::optional<FlatnessViolation> flatness_check(const Graph& g, const ConnectedPartition& p,
                                                const FlatnessSchedule& f, int r_max) {
  p.validate(g);
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  for (int i = 0; i < p.part_count(); ++i) {
    std::vector<char> in_part(n, 0);
    for (int v : p.parts[i]) in_part[v] = 1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      auto dist = bfs_within(g, v, alive);
      for (int r = 1; r <= r_max; ++r) {
        int mass = 0;
        for (int u = 0; u < n; ++u)
          if (in_part[u] && dist[u] >= 0 && dist[u] <= r) ++mass;
        if (mass > f(r)) return FlatnessViolation{i, v, r, mass};
      }
    }
    for (int v : p.parts[i]) alive[v] = 0;
  }
  return std::nullopt;
}

VertexOrder order_from_partition(const Graph& g, const ConnectedPartition& p,
                                 const std::vector<VertexOrder>* inner) {
  p.validate(g);
  if (inner && static_cast<int>(inner->size()) != p.part_count())
    throw Error("need one inner order per part");
  std::vector<int> perm;
  perm.reserve(g.vertex_count());
  for (int i = 0; i < p.part_count(); ++i) {
    const auto& part = p.parts[i];
    if (inner) {
      const auto& o = (*inner)[i];
      if (o.size() != static_cast<int>(part.size()))
        throw Error("inner order size mismatch at part " + std::to_string(i));
      for (int pos = 0; pos < o.size(); ++pos) perm.push_back(part[o.vertex_at(pos)]);
    } else {
      // BFS order of the induced part from its smallest vertex
      auto sub = g.induced(part);
      std::vector<int> dist = bfs_all(sub, 0);
      std::vector<int> idx(part.size());
      for (size_t j = 0; j < part.size(); ++j) idx[j] = static_cast<int>(j);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return dist[a] < dist[b]; });
      for (int j : idx) perm.push_back(part[j]);
    }
  }
  return VertexOrder::from_permutation(std::move(perm));
}

namespace {

// vertices of one residual component, smallest first
std::vector<int> component_vertices(const Graph& g, int start, const std::vector<char>& alive) {
  auto dist = bfs_within(g, start, alive);
  std::vector<int> comp;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) comp.push_back(v);
  return comp;
}

std::vector<int> bfs_deepest_path(const Graph& g, int root, const std::vector<char>& alive) {
  int n = g.vertex_count();
  auto dist = bfs_within(g, root, alive);
  // parent pointers of a BFS tree, smallest-id parents first
  std::vector<int> parent(n, -1);
  for (int v = 0; v < n; ++v) {
    if (dist[v] <= 0) continue;
    for (int u : g.neighbors(v))
      if (alive[u] && dist[u] == dist[v] - 1) {
        parent[v] = u;
        break;
      }
  }
  int deepest = root;
  for (int v = 0; v < n; ++v)
    if (dist[v] > dist[deepest]) deepest = v;
  std::vector<int> path;
  for (int v = deepest; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;  // root-to-leaf vertical path, isometric by the BFS property
}

std::vector<int> diameter_shortest_path(const Graph& g, const std::vector<int>& comp,
                                        const std::vector<char>& alive) {
  int best_u = comp[0], best_v = comp[0], best_d = 0;
  for (int u : comp) {
    auto dist = bfs_within(g, u, alive);
    for (int v : comp)
      if (dist[v] > best_d) {
        best_d = dist[v];
        best_u = u;
        best_v = v;
      }
  }
  auto dist = bfs_within(g, best_u, alive);
  std::vector<int> path{best_v};
  int cur = best_v;
  while (cur != best_u) {
    for (int u : g.neighbors(cur))
      if (alive[u] && dist[u] == dist[cur] - 1) {
        cur = u;
        break;
      }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ConnectedPartition isometric_peel(const Graph& g, PeelPolicy policy) {
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  int remaining = n;
  ConnectedPartition p;
  while (remaining > 0) {
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
      if (alive[v]) start = v;
    auto comp = component_vertices(g, start, alive);
    std::vector<int> path = policy == PeelPolicy::bfs_vertical
                                ? bfs_deepest_path(g, comp[0], alive)
                                : diameter_shortest_path(g, comp, alive);
    // parts must be isometric in the residual graph at creation time
    auto check = bfs_within(g, path.front(), alive);
    if (check[path.back()] != static_cast<int>(path.size()) - 1)
      throw ContractViolation("peeled part is not an isometric path");
    p.parts.push_back(path);
    for (int v : path) {
      alive[v] = 0;
      --remaining;
    }
  }
  return p;
}

}  // namespace colnum
