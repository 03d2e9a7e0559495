#pragma once

#include <optional>
#include <vector>

#include "colnum/graph.hpp"

namespace colnum {

// All-pairs BFS hop distances.  Unreachable pairs are a dedicated sentinel
// exposed as an empty optional, never a large integer.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g);

  int vertex_count() const { return n_; }

  bool reachable(int u, int v) const { return table_[idx(u, v)] >= 0; }
  std::optional<int> dist(int u, int v) const {
    int d = table_[idx(u, v)];
    if (d < 0) return std::nullopt;
    return d;
  }

  // Closed ball N_r[v]: vertices at distance <= r, including v.
  std::vector<int> ball(int v, int r) const;
  // Vertices at distance exactly r.
  std::vector<int> exact_sphere(int v, int r) const;

  int eccentricity(int v) const;  // ignores unreachable vertices

 private:
  int idx(int u, int v) const { return u * n_ + v; }
  int n_;
  std::vector<int> table_;  // -1 = unreachable
};

// Single-source BFS in g restricted to an allowed-vertex mask (vector<char>
// of size n); dist[v] = -1 where unreachable or disallowed.  The source must
// be allowed.
std::vector<int> bfs_within(const Graph& g, int source, const std::vector<char>& allowed);

std::vector<int> bfs_all(const Graph& g, int source);

}  // namespace colnum
