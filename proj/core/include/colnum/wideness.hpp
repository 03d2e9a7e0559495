#pragma once

#include <string>
#include <variant>
#include <vector>

#include "colnum/graph.hpp"

namespace colnum {

// Proof that B ⊆ A \ S is distance-r independent in G - S.
struct WidenessCertificate {
  std::vector<int> A;
  int r = 0;
  int m = 0;
  std::vector<int> S;
  std::vector<int> B;

  // independent re-verification by pairwise BFS in G - S
  bool verify(const Graph& g, std::string* why = nullptr) const;
  std::string to_json() const;
};

struct WidenessFailure {
  int best_b = 0;  // largest independent set found
  int used_s = 0;  // deletions spent
};

// Greedy far-point selection with bottleneck promotion: grow B through A in
// id order keeping pairwise distance > r in G - S; when |B| stalls below m,
// move the vertex covering the most of A into S and restart.  Falls back to
// exhaustive search on graphs with at most 10 vertices.
std::variant<WidenessCertificate, WidenessFailure> uqw_extract(const Graph& g,
                                                               const std::vector<int>& A,
                                                               int r, int m, int s_budget);

}  // namespace colnum
