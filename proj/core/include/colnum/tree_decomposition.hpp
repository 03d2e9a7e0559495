#pragma once

#include <string>
#include <vector>

#include "colnum/digraph.hpp"
#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// Rooted tree decomposition.  Nodes are 0-based internally; the PACE-style
// file format is 1-based.
struct TreeDecomposition {
  int node_count = 0;
  int root = 0;
  std::vector<int> parent;             // -1 at the root
  std::vector<std::vector<int>> bags;  // sorted

  // derived views
  std::vector<int> adhesion(int x) const;  // bag(x) ∩ bag(parent), ∅ at root
  std::vector<int> margin(int x) const;    // bag(x) \ adhesion(x)
  int adhesion_width() const;              // max |adhesion|
  Graph torso(const Graph& g, int x) const;

  std::vector<int> children(int x) const;
  std::vector<int> dfs_preorder() const;

  // throws Error citing the violated condition (bag connectivity, edge
  // coverage, tree shape)
  void validate(const Graph& g) const;

  // "s td <nodes> <maxbag> <n>", "b <node> <v...>", "t <parent> <child>"
  static TreeDecomposition parse(const std::string& text);
  std::string serialize() const;
};

// Skeleton: arcs u -> v whenever u lies in the margin and v in the adhesion
// of the same node.  Always acyclic for valid decompositions.
DiGraph skeleton(const Graph& g, const TreeDecomposition& t);

struct SkeletonReach {
  std::vector<int> reached;  // sorted, includes the start
  long long count_bound;     // C(r + adhesion, adhesion)
};

// BFS of depth r in the skeleton; asserts the count bound of the
// decomposition lemma.
SkeletonReach skeleton_reach(const Graph& g, const TreeDecomposition& t, int u, int r);

// Order linearizing the tree quasi-order: margins of ancestors come before
// descendants (tree DFS preorder breaks incomparable ties), and inside each
// margin the torso order restricted to the margin applies.
VertexOrder compose_td_order(const Graph& g, const TreeDecomposition& t,
                             const std::vector<VertexOrder>& torso_orders);

}  // namespace colnum
