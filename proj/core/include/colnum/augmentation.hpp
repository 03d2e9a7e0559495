#pragma once

#include <string>
#include <vector>

#include "colnum/digraph.hpp"
#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// Arc-weight map on ordered vertex pairs with values in {1..r}; an absent
// entry means infinity.  For every pair at most one direction is finite,
// for every source edge the finite direction has weight 1, and the
// three-case closure condition holds (checked by validate).
class FraternityFunction {
 public:
  FraternityFunction(int n, int r) : n_(n), r_(r), weight_(static_cast<size_t>(n) * n, 0) {}

  int radius() const { return r_; }
  int vertex_count() const { return n_; }

  // 0 encodes infinity
  int weight(int u, int v) const { return weight_[static_cast<size_t>(u) * n_ + v]; }
  bool finite(int u, int v) const { return weight(u, v) != 0; }
  void set_weight(int u, int v, int w);

  // arcs of weight <= i (the i-fraternal augmentation)
  DiGraph level(int i) const;

  // throws ContractViolation naming the broken invariant
  void validate(const Graph& g) const;

 private:
  int n_, r_;
  std::vector<int> weight_;
};

struct AugmentationSequence {
  Graph source;
  int r = 0;
  FraternityFunction w{0, 1};
  std::vector<DiGraph> levels;        // levels[i] = (i+1)-fraternal augmentation
  std::vector<int> max_out_degree;    // per level

  const DiGraph& top() const { return levels.back(); }

  // "u v w" per line, arcs sorted
  std::string serialize_arcs() const;
  std::string summary_json() const;
};

// Acyclic orientation from the degeneracy order: each edge points from the
// later vertex to the earlier, so the max out-degree equals the degeneracy.
DiGraph degeneracy_orientation(const Graph& g);

// Greedy transitive-free fraternal augmentation up to radius r.  Level 1 is
// the degeneracy orientation (or the back-orientation of `initial` when
// given); each level d collects every pair with a common source z and
// w(z,u)+w(z,v) = d into an auxiliary graph, orients it by its own
// degeneracy order, and inserts the arcs with weight d.
AugmentationSequence fraternal_augment(const Graph& g, int r,
                                       const VertexOrder* initial = nullptr);

// The r-fraternity function induced by an order: w(u,v) is the level at
// which v enters SReach_i[G,pi,u].
FraternityFunction fraternity_from_order(const Graph& g, const VertexOrder& pi, int r);

struct AugmentationOrderResult {
  VertexOrder order;
  long long certified_bound = 0;  // 4 d^2 with d = r * Delta^r
  int delta = 0;                  // max out-degree of the top level
  int achieved_wcol = 0;          // wcol_r(G, order), asserted <= bound
};

// Weighted-length-<= r closure of the augmentation, degeneracy order of its
// underlying undirected graph, and the certified wcol bound.
AugmentationOrderResult order_from_augmentation(const Graph& g,
                                                const AugmentationSequence& seq);

}  // namespace colnum
