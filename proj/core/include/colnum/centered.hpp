#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "colnum/coloring.hpp"
#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// Rooted forest on V(G) whose ancestor relation covers every edge; built
// from an order by parenting each vertex to the largest other vertex it
// weakly reaches.  depth equals the depth of the order.
struct EliminationForest {
  std::vector<int> parent;  // -1 at roots
  int depth = 0;

  std::vector<int> ancestors(int v) const;  // v first, then up to the root
  void validate(const Graph& g) const;      // throws ContractViolation
};

EliminationForest elimination_forest(const Graph& g, const VertexOrder& pi);

inline constexpr int kDefaultCenteredCap = 16;

// Exhaustive p-centered check: every connected subgraph has a uniquely
// colored vertex or at least p colors.  Returns an inclusion-minimal
// violating vertex set, or nothing on pass.  Exponential in n.
std::optional<std::vector<int>> verify_centered(const Graph& g, const Coloring& c, int p,
                                                int cap = kDefaultCenteredCap);

// Zhu's construction: greedy coloring of the reach graph at radius 2^{p-2},
// verified p-centered before returning.  The order defaults to the greedy
// admissibility order at that radius.
Coloring p_centered_zhu(const Graph& g, int p,
                        const std::optional<VertexOrder>& pi = std::nullopt,
                        int verify_cap = kDefaultCenteredCap);

struct TreedepthColoringViolation {
  std::vector<int> colors;  // class subset I
  int treedepth;            // td of the union, > |I|
};

// p-treedepth check: any i <= p color classes induce treedepth at most i.
std::optional<TreedepthColoringViolation> verify_treedepth_coloring(const Graph& g,
                                                                    const Coloring& c, int p);

// Product construction turning a p-treedepth coloring with k colors into a
// (p+1)-centered coloring with at most k(2p C(k-1,p-1) + 1) colors.
Coloring centered_from_treedepth(const Graph& g, const Coloring& c, int p,
                                 int verify_cap = kDefaultCenteredCap);

}  // namespace colnum
