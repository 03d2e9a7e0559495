#pragma once

#include <string>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// r-neighborhood cover: every closed r-ball lies inside some cluster.
struct Cover {
  int r = 0;
  std::vector<std::vector<int>> clusters;
  int measured_radius = 0;  // max cluster radius, from the defining vertex
  int degree = 0;           // max clusters meeting at one vertex

  std::string serialize() const;     // one cluster per line
  std::string summary_json() const;  // {radius, degree, clusters}
};

// Weak-reachability dual cover: cluster X_v = {w : v in WReach_2r[G,pi,w]}.
// Verifies the cover property, radius <= 2r and degree <= wcol_2r(G,pi)
// before returning.
Cover neighborhood_cover(const Graph& g, const VertexOrder& pi, int r);

struct TraceReport {
  long long distinct = 0;  // |{N_r(v) ∩ A : v}| with open balls minus v
  int wcol_2r = 0;         // of the order used for the bound
  double bound = 0;        // (2r+2)^wcol * wcol * |A| / 2 + 1
  bool within = false;
};

// Distinct traces of open r-neighborhoods on A, compared against the
// neighborhood-complexity bound instantiated with wcol_2r of `pi` (or of
// the default order when absent).
TraceReport neighborhood_complexity(const Graph& g, const std::vector<int>& A, int r,
                                    const VertexOrder* pi = nullptr);

}  // namespace colnum
