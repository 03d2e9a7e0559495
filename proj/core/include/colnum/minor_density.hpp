#pragma once

#include <vector>

#include "colnum/graph.hpp"
#include "colnum/rational.hpp"

namespace colnum {

// Witnessing depth-r minor model: pairwise disjoint connected branch sets of
// radius <= r, together with the density |E(H)|/|V(H)| of the contracted
// graph H (every pair of branch sets joined by a cross edge counts).
struct MinorWitness {
  Rational density;
  std::vector<std::vector<int>> branch_sets;
};

// Greatest reduced average density of rank r, by exhaustive search over all
// families of disjoint connected radius-<=r branch sets.  Exponential; the
// cap guards against accidental large inputs and can be raised explicitly.
MinorWitness nabla_exact(const Graph& g, int r, int cap = 8);

}  // namespace colnum
