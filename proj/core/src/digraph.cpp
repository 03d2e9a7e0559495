#include "colnum/digraph.hpp"

#include <algorithm>
#include <string>

namespace colnum {

void DiGraph::add_arc(int u, int v) {
  if (u == v) throw Error("self-arc at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("arc endpoint out of range");
  auto& o = out_[u];
  auto it = std::lower_bound(o.begin(), o.end(), v);
  if (it != o.end() && *it == v) return;
  o.insert(it, v);
}

bool DiGraph::has_arc(int u, int v) const {
  const auto& o = out_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

int DiGraph::max_out_degree() const {
  int d = 0;
  for (const auto& o : out_) d = std::max(d, static_cast<int>(o.size()));
  return d;
}

int DiGraph::arc_count() const {
  int m = 0;
  for (const auto& o : out_) m += static_cast<int>(o.size());
  return m;
}

std::vector<Arc> DiGraph::arcs() const {
  std::vector<Arc> a;
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) a.emplace_back(u, v);
  return a;
}

}  // namespace colnum
