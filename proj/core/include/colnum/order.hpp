#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colnum/graph.hpp"

namespace colnum {

// Permutation of 0..n-1 with constant-time rank lookup.  Position 0 is the
// smallest vertex.
class VertexOrder {
 public:
  VertexOrder() = default;

  static VertexOrder identity(int n);
  static VertexOrder from_permutation(std::vector<int> perm);

  int size() const { return static_cast<int>(perm_.size()); }
  int vertex_at(int pos) const { return perm_[pos]; }
  int rank(int v) const { return rank_[v]; }
  bool less(int u, int v) const { return rank_[u] < rank_[v]; }

  const std::vector<int>& permutation() const { return perm_; }
  const std::vector<int>& ranks() const { return rank_; }

  VertexOrder reversed() const;

  // whitespace-separated permutation line
  std::string serialize() const;
  static VertexOrder parse(const std::string& line, int n);

 private:
  std::vector<int> perm_;
  std::vector<int> rank_;
};

struct DegeneracyResult {
  int degeneracy;
  VertexOrder order;  // back-degree <= degeneracy for every vertex
};

// Min-degree-first elimination, smallest id on ties; the returned order is
// the reversed removal sequence.
DegeneracyResult degeneracy_order(const Graph& g);

VertexOrder random_order(int n, std::uint64_t seed);

}  // namespace colnum
