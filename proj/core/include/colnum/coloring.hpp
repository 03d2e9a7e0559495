#pragma once

#include <string>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// Total vertex coloring with 0-based color ids.
struct Coloring {
  std::vector<int> assignment;

  int palette() const;
  bool proper_on(const Graph& g) const;

  // "vertex color" lines
  std::string serialize() const;
  static Coloring parse(const std::string& text, int n);
};

// First-fit along the order: each vertex takes the least color unused on
// its smaller neighbors.
Coloring first_fit(const Graph& g, const VertexOrder& pi);

// G<pi,r>: u ~ v iff one weakly r-reaches the other.  Supergraph of G for
// r >= 1.
Graph reach_graph(const Graph& g, const VertexOrder& pi, Radius r);

// Greedy coloring of G<pi,r> along pi; palette <= wcol_r(G, pi).
Coloring reach_graph_coloring(const Graph& g, const VertexOrder& pi, Radius r);

}  // namespace colnum
