#include "colnum/distance.hpp"

#include <algorithm>
#include <queue>

namespace colnum {

std::vector<int> bfs_within(const Graph& g, int source, const std::vector<char>& allowed) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (!allowed[source]) return dist;
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (allowed[y] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_all(const Graph& g, int source) {
  std::vector<char> allowed(g.vertex_count(), 1);
  return bfs_within(g, source, allowed);
}

DistanceOracle::DistanceOracle(const Graph& g) : n_(g.vertex_count()) {
  table_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int v = 0; v < n_; ++v) {
    auto d = bfs_all(g, v);
    std::copy(d.begin(), d.end(), table_.begin() + idx(v, 0));
  }
}

std::vector<int> DistanceOracle::ball(int v, int r) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    int d = table_[idx(v, u)];
    if (d >= 0 && d <= r) out.push_back(u);
  }
  return out;
}

std::vector<int> DistanceOracle::exact_sphere(int v, int r) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (table_[idx(v, u)] == r) out.push_back(u);
  return out;
}

int DistanceOracle::eccentricity(int v) const {
  int e = 0;
  for (int u = 0; u < n_; ++u) e = std::max(e, table_[idx(v, u)]);
  return e;
}

}  // namespace colnum
