#include "colnum/graph.hpp"

#include <algorithm>
#include <atomic>

#include "colnum/util.hpp"

namespace colnum {

namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }
int threads() { return g_threads.load(); }

void parallel_for(int count, const std::function<void(int)>& fn) {
  int nt = std::min(threads(), count);
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  int chunk = (count + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    int lo = t * chunk, hi = std::min(count, lo + chunk);
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

Graph Graph::from_edges(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
  if (n < 0) throw Error("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error("label map size does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);
  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> id(n_, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) id[vertices[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (id[u] >= 0 && id[v] >= 0) edges.emplace_back(id[u], id[v]);
  return from_edges(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<int> Graph::component_of(int v) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{v}, out;
  seen[v] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<char> seen(n_, 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n_; ++v) {
    if (seen[v]) continue;
    auto comp = component_of(v);
    for (int x : comp) seen[x] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  return static_cast<int>(component_of(0).size()) == n_;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw SizeError("adjacency masks need n <= 64");
  std::vector<std::uint64_t> m(n_, 0);
  for (auto [u, v] : edges_) {
    m[u] |= bit(v);
    m[v] |= bit(u);
  }
  return m;
}

}  // namespace colnum
