#pragma once

#include <string>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// Per-radius quality table of one order: col_r and wcol_r for r = 1..r_max,
// optional gcol_{l,r} columns, plus the r = infinity row (fill-in width + 1
// and depth).
struct OrderProfile {
  int r_max = 0;
  std::vector<int> col;        // col[i] = col_{i+1}
  std::vector<int> wcol;       // wcol[i] = wcol_{i+1}
  std::vector<int> hop_ells;   // requested l values
  std::vector<std::vector<int>> gcol;  // gcol[j][i] = gcol_{ell_j, i+1}
  int col_inf = 0;             // max |SReach_inf| = fill-in width + 1
  int wcol_inf = 0;            // depth of the order

  int col_at(Radius r) const;
  int wcol_at(Radius r) const;

  // {"col": {"1": ..., "inf": ...}, "wcol": {...}, "gcol_l": {...}}
  std::string to_json() const;
};

OrderProfile order_profile(const Graph& g, const VertexOrder& pi, int r_max,
                           const std::vector<int>& hop_ells = {});

}  // namespace colnum
