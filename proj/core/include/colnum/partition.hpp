#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// Ordered list of disjoint nonempty connected vertex sets covering V(G).
struct ConnectedPartition {
  std::vector<std::vector<int>> parts;

  int part_count() const { return static_cast<int>(parts.size()); }
  // throws Error naming the first invalid part
  void validate(const Graph& g) const;
};

struct QuotientResult {
  Graph quotient;  // vertex i = part i, in part order
  int width = 0;   // max fill-in back-degree of the part order
};

QuotientResult quotient(const Graph& g, const ConnectedPartition& p);

// radius -> allowed neighborhood mass
using FlatnessSchedule = std::function<int(int)>;

struct FlatnessViolation {
  int part;    // index i
  int vertex;  // v in the residual graph
  int radius;  // r with |N_r[v] ∩ V_i| > f(r)
  int mass;
};

// Checks |N_r[v] ∩ V_i| <= f(r) in G - (V_1 ∪ ... ∪ V_{i-1}) for every
// part, vertex of the residual graph, and radius 1..r_max.  Closed balls.
std::optional<FlatnessViolation> flatness_check(const Graph& g, const ConnectedPartition& p,
                                                const FlatnessSchedule& f, int r_max);

// Concatenation of per-part inner orders in part order.  Defaults to BFS
// order of each part from its smallest vertex.
VertexOrder order_from_partition(const Graph& g, const ConnectedPartition& p,
                                 const std::vector<VertexOrder>* inner = nullptr);

enum class PeelPolicy { bfs_vertical, diameter_path };

// Repeatedly removes a path that is isometric in the current residual
// graph; every part is verified isometric at creation time.
ConnectedPartition isometric_peel(const Graph& g, PeelPolicy policy);

}  // namespace colnum
