#include "colnum/reach.hpp"

#include <algorithm>
#include <queue>

#include "colnum/distance.hpp"

namespace colnum {

namespace {

// BFS from v expanding only through vertices larger than v; entries into
// {u : u <= v} are recorded but not expanded.
std::vector<int> strong_distances_impl(const Graph& g, const VertexOrder& pi, int v,
                                       int budget) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (dist[x] == budget) continue;
    bool expandable = (x == v) || pi.less(v, x);
    if (!expandable) continue;
    for (int y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  // keep only v and smaller endpoints
  for (int u = 0; u < n; ++u)
    if (u != v && dist[u] >= 0 && pi.less(v, u)) dist[u] = -1;
  return dist;
}

}  // namespace

std::vector<int> strong_reach_distances(const Graph& g, const VertexOrder& pi, int v,
                                        Radius r) {
  return strong_distances_impl(g, pi, v, r.bound(g.vertex_count()));
}

std::vector<int> strong_reach(const Graph& g, const VertexOrder& pi, int v, Radius r) {
  auto dist = strong_reach_distances(g, pi, v, r);
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (dist[u] >= 0) out.push_back(u);
  return out;
}

std::vector<int> weak_reach(const Graph& g, const VertexOrder& pi, int v, Radius r) {
  int n = g.vertex_count();
  int budget = r.bound(n);
  std::vector<int> out;
  // u is weakly reachable from v iff v lies within distance r of u in the
  // subgraph induced by u and everything larger.
  for (int u = 0; u < n; ++u) {
    if (pi.less(v, u)) continue;
    std::vector<char> allowed(n, 0);
    for (int x = 0; x < n; ++x)
      if (x == u || pi.less(u, x)) allowed[x] = 1;
    auto dist = bfs_within(g, u, allowed);
    if (dist[v] >= 0 && dist[v] <= budget) out.push_back(u);
  }
  return out;
}

namespace {

struct HopSearch {
  const Graph* g;
  const VertexOrder* pi;
  int budget, ell;
  std::vector<char> on_path;
  std::vector<char> reached;

  void dfs(int x, int depth, int min_rank, int hops) {
    if (depth == budget) return;
    on_path[x] = 1;
    for (int y : g->neighbors(x)) {
      if (on_path[y]) continue;
      int yr = pi->rank(y);
      if (yr < min_rank) {
        int h = hops + 1;
        if (h > ell) continue;
        reached[y] = 1;
        if (h < ell) {
          dfs(y, depth + 1, yr, h);
        }
        // at h == ell every later endpoint would need one more descent
      } else {
        dfs(y, depth + 1, min_rank, hops);
      }
    }
    on_path[x] = 0;
  }
};

}  // namespace

std::vector<int> hop_reach(const Graph& g, const VertexOrder& pi, int v, Radius r, int ell) {
  if (ell < 1) throw Error("hop budget must be >= 1");
  int n = g.vertex_count();
  HopSearch hs{&g, &pi, r.bound(n), ell, std::vector<char>(n, 0), std::vector<char>(n, 0)};
  hs.reached[v] = 1;
  hs.dfs(v, 0, pi.rank(v), 0);
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (hs.reached[u]) out.push_back(u);
  return out;
}

std::vector<int> reach_set(const Graph& g, const VertexOrder& pi, int v, Radius r,
                           ReachMode mode) {
  if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range");
  if (pi.size() != g.vertex_count()) throw Error("order size mismatch");
  if (!r.is_infinite() && r.value() < 1) throw Error("radius must be >= 1 or infinite");
  switch (mode.kind) {
    case ReachMode::Kind::strong:
      return strong_reach(g, pi, v, r);
    case ReachMode::Kind::weak:
      return weak_reach(g, pi, v, r);
    case ReachMode::Kind::hop:
      return hop_reach(g, pi, v, r, mode.hops);
  }
  throw Error("bad reach mode");
}

std::vector<int> strong_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r) {
  int n = g.vertex_count();
  std::vector<int> sizes(n, 0);
  for (int v = 0; v < n; ++v) {
    auto dist = strong_reach_distances(g, pi, v, r);
    for (int u = 0; u < n; ++u)
      if (dist[u] >= 0) ++sizes[v];
  }
  return sizes;
}

std::vector<int> weak_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r) {
  int n = g.vertex_count();
  int budget = r.bound(n);
  std::vector<int> sizes(n, 0);
  // sweep over u from the largest down: a bounded BFS from u among
  // {u} ∪ {larger} finds every v with u in WReach_r[v]
  std::vector<char> allowed(n, 0);
  for (int pos = n - 1; pos >= 0; --pos) {
    int u = pi.vertex_at(pos);
    allowed[u] = 1;
    auto dist = bfs_within(g, u, allowed);
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0 && dist[v] <= budget) ++sizes[v];
  }
  return sizes;
}

std::vector<int> hop_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r, int ell) {
  int n = g.vertex_count();
  std::vector<int> sizes(n, 0);
  for (int v = 0; v < n; ++v)
    sizes[v] = static_cast<int>(hop_reach(g, pi, v, r, ell).size());
  return sizes;
}

namespace {
int max_of(const std::vector<int>& xs) {
  int m = 0;
  for (int x : xs) m = std::max(m, x);
  return m;
}
}  // namespace

int col_of_order(const Graph& g, const VertexOrder& pi, Radius r) {
  return max_of(strong_reach_sizes(g, pi, r));
}

int wcol_of_order(const Graph& g, const VertexOrder& pi, Radius r) {
  return max_of(weak_reach_sizes(g, pi, r));
}

int gcol_of_order(const Graph& g, const VertexOrder& pi, Radius r, int ell) {
  return max_of(hop_reach_sizes(g, pi, r, ell));
}

}  // namespace colnum
