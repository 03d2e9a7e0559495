#pragma once

#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

enum class Measure { col, wcol, gcol, adm, treewidth, treedepth };

Measure parse_measure(const std::string& name);
std::string measure_name(Measure m);

struct ExactResult {
  int value = 0;
  VertexOrder witness;
};

inline constexpr int kDefaultExactCap = 9;

// Minimum of the measure over all n! orders, with a witness attaining it.
// col and adm run a subset DP (their per-vertex cost depends only on the
// set of smaller vertices); wcol/treedepth run branch-and-bound over order
// prefixes with counter lower bounds; gcol scans whole permutations.
// treewidth is reported as min fill-in width, i.e. col_inf - 1.
ExactResult exact_parameter(const Graph& g, Radius r, Measure measure, int ell = 0,
                            int cap = kDefaultExactCap);

}  // namespace colnum
