#pragma once

#include <optional>

#include "colnum/coloring.hpp"
#include "colnum/graph.hpp"
#include "colnum/order.hpp"

namespace colnum {

// G^{[#p]}: edges between vertices at hop distance exactly p.
Graph exact_distance_graph(const Graph& g, int p);

// For odd p, colors v by rho(m(v)) where rho greedily colors the reach
// graph at radius 2p-1 and m(v) is the order-minimum of the closed
// floor(p/2)-ball around v.  Verified proper on G^{[#p]} before returning.
Coloring exact_distance_color(const Graph& g, int p,
                              const std::optional<VertexOrder>& pi = std::nullopt);

}  // namespace colnum
