#pragma once

#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// Reachability mode: strong is hop(1), weak at radius r is hop(r).
struct ReachMode {
  enum class Kind { strong, weak, hop } kind;
  int hops = 0;

  static ReachMode strong() { return {Kind::strong, 0}; }
  static ReachMode weak() { return {Kind::weak, 0}; }
  static ReachMode hop(int ell) {
    if (ell < 1) throw Error("hop budget must be >= 1");
    return {Kind::hop, ell};
  }
};

// Vertices u <= v joined to v by a path of length <= r whose internal
// vertices are all larger than v; v itself is included via the length-0
// path.  Sorted output.
std::vector<int> strong_reach(const Graph& g, const VertexOrder& pi, int v, Radius r);

// As above but internal vertices larger than u (equivalently, u is the
// minimum of the path).
std::vector<int> weak_reach(const Graph& g, const VertexOrder& pi, int v, Radius r);

// l-hop r-reachability: paths making at most `ell` descents, found by DFS
// over simple paths with dominance pruning.
std::vector<int> hop_reach(const Graph& g, const VertexOrder& pi, int v, Radius r, int ell);

std::vector<int> reach_set(const Graph& g, const VertexOrder& pi, int v, Radius r,
                           ReachMode mode);

// |SReach_r| / |WReach_r| / |GReach_{l,r}| for every vertex at once.
std::vector<int> strong_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r);
std::vector<int> weak_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r);
std::vector<int> hop_reach_sizes(const Graph& g, const VertexOrder& pi, Radius r, int ell);

int col_of_order(const Graph& g, const VertexOrder& pi, Radius r);
int wcol_of_order(const Graph& g, const VertexOrder& pi, Radius r);
int gcol_of_order(const Graph& g, const VertexOrder& pi, Radius r, int ell);

// Minimum hop distance from v to each smaller vertex along paths whose
// internal vertices exceed v; -1 where unreachable.  dist[v] = 0.
std::vector<int> strong_reach_distances(const Graph& g, const VertexOrder& pi, int v,
                                        Radius r);

}  // namespace colnum
