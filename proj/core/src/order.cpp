#include "colnum/order.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace colnum {

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return from_permutation(std::move(perm));
}

VertexOrder VertexOrder::from_permutation(std::vector<int> perm) {
  int n = static_cast<int>(perm.size());
  std::vector<int> rank(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int v = perm[pos];
    if (v < 0 || v >= n || rank[v] != -1)
      throw Error("order is not a permutation of 0.." + std::to_string(n - 1));
    rank[v] = pos;
  }
  VertexOrder o;
  o.perm_ = std::move(perm);
  o.rank_ = std::move(rank);
  return o;
}

VertexOrder VertexOrder::reversed() const {
  std::vector<int> perm(perm_.rbegin(), perm_.rend());
  return from_permutation(std::move(perm));
}

std::string VertexOrder::serialize() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << perm_[i];
  }
  out << '\n';
  return out.str();
}

VertexOrder VertexOrder::parse(const std::string& line, int n) {
  std::istringstream in(line);
  std::vector<int> perm;
  int v;
  while (in >> v) perm.push_back(v);
  if (static_cast<int>(perm.size()) != n)
    throw Error("order has " + std::to_string(perm.size()) + " entries, expected " +
                std::to_string(n));
  return from_permutation(std::move(perm));
}

DegeneracyResult degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<int> removal;
  removal.reserve(n);
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    degeneracy = std::max(degeneracy, deg[pick]);
    removed[pick] = 1;
    removal.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!removed[u]) --deg[u];
  }
  std::reverse(removal.begin(), removal.end());
  return {degeneracy, VertexOrder::from_permutation(std::move(removal))};
}

VertexOrder random_order(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return VertexOrder::from_permutation(std::move(perm));
}

}  // namespace colnum
