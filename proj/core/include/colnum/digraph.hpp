#pragma once

#include <utility>
#include <vector>

#include "colnum/errors.hpp"

namespace colnum {

using Arc = std::pair<int, int>;

// Simple directed graph: no self-arcs, at most one arc per ordered pair.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int n) : n_(n), out_(n) {}

  int vertex_count() const { return n_; }

  void add_arc(int u, int v);
  bool has_arc(int u, int v) const;

  const std::vector<int>& out(int v) const { return out_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int max_out_degree() const;
  int arc_count() const;

  std::vector<Arc> arcs() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> out_;  // sorted
};

}  // namespace colnum
