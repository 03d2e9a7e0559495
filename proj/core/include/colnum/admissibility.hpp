#pragma once

#include <vector>

#include "colnum/fan.hpp"
#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// adm_r(G, pi): max over positions i of b_r(V_i, v_i).
int adm_of_order(const Graph& g, const VertexOrder& pi, Radius r,
                 int interior_cap = kDefaultInteriorCap);

struct GreedyAdmResult {
  VertexOrder order;
  int value = 0;  // in exact mode this equals adm_r(G)
  FanMode mode = FanMode::exact;
};

// Builds the order back to front, always choosing a vertex of minimum
// back-connectivity b_r(S, v); ties go to the smallest id.  Exact mode is
// optimal; approx mode evaluates fans by greedy peeling and stays within a
// factor r.
GreedyAdmResult greedy_adm_order(const Graph& g, Radius r, FanMode mode,
                                 int interior_cap = kDefaultInteriorCap);

// Good default order for downstream constructions: exact greedy when the
// instance allows it, approx greedy otherwise.
VertexOrder default_order(const Graph& g, Radius r);

struct UniversalOrderResult {
  VertexOrder order;
  std::vector<long long> schedule;  // f(1..r_max) actually used
  std::vector<int> achieved;        // adm_r(G, order) for r = 1..r_max
  int doublings = 0;
};

// One order bounding b_r simultaneously for every r <= r_max.  The auto
// schedule starts at f(r) = 2^{r+1} * (greedy adm_r estimate) and doubles
// all thresholds whenever no vertex qualifies, which always terminates.
UniversalOrderResult universal_order(const Graph& g, int r_max,
                                     std::vector<long long> schedule = {},
                                     int interior_cap = kDefaultInteriorCap);

}  // namespace colnum
