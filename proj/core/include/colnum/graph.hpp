#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colnum/errors.hpp"

namespace colnum {

using Edge = std::pair<int, int>;

// Finite simple undirected graph over vertex ids 0..n-1.  Immutable after
// construction; safe to share across threads.  External string labels, when
// present, survive only through I/O.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges, normalizes endpoints to (min,max), rejects
  // self-loops and out-of-range endpoints.
  static Graph from_edges(int n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  const std::vector<Edge>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Induced subgraph on `vertices` (kept in the given id order).  The i-th
  // listed vertex becomes vertex i; labels are dropped.
  Graph induced(std::span<const int> vertices) const;

  std::vector<int> component_of(int v) const;
  std::vector<std::vector<int>> components() const;
  bool connected() const;

  // Per-vertex adjacency bitmask; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<Edge> edges_;            // sorted, u < v
  std::vector<std::string> labels_;    // empty or size n
};

}  // namespace colnum
