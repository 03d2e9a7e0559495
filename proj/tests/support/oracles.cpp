#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "colnum/util.hpp"

namespace colnum::testsupport {

namespace {
using std::uint32_t;
using std::uint64_t;

std::vector<uint64_t> masks_of(const Graph& g) { return g.adjacency_masks(); }

bool mask_connected(uint64_t mask, const std::vector<uint64_t>& adj) {
  if (!mask) return true;
  uint64_t seen = bit(std::countr_zero(mask));
  for (;;) {
    uint64_t grow = seen;
    uint64_t m = seen;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      grow |= adj[v] & mask;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}
}  // namespace

int treewidth_dp(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return -1;
  // textbook elimination: remove a vertex, turn its residual neighborhood
  // into a clique; width = max degree at removal time
  std::vector<int> memo(size_t{1} << n, -1);
  auto full = static_cast<uint64_t>((size_t{1} << n) - 1);

  struct Rec {
    int n;
    std::vector<int>* memo;
    uint64_t full;

    int run(uint64_t alive, std::vector<uint64_t> adj) {
      if (std::popcount(alive) <= 1) return 0;
      int& slot = (*memo)[alive];
      if (slot >= 0) return slot;
      int best = n;
      uint64_t m = alive;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t nbr = adj[v] & alive & ~bit(v);
        int deg = std::popcount(nbr);
        if (deg >= best) continue;
        auto next = adj;
        uint64_t nm = nbr;
        while (nm) {
          int u = std::countr_zero(nm);
          nm &= nm - 1;
          next[u] |= nbr & ~bit(u);
        }
        int sub = run(alive & ~bit(v), std::move(next));
        best = std::min(best, std::max(deg, sub));
      }
      slot = best;
      return best;
    }
  } rec{n, &memo, full};
  return rec.run(full, masks_of(g));
}

int treedepth_dp(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  auto adj = masks_of(g);
  std::vector<int> memo(size_t{1} << n, -1);

  struct Rec {
    const std::vector<uint64_t>* adj;
    std::vector<int>* memo;

    int run(uint64_t mask) {
      if (!mask) return 0;
      int& slot = (*memo)[mask];
      if (slot >= 0) return slot;
      // split into components
      uint64_t comp = bit(std::countr_zero(mask));
      for (;;) {
        uint64_t grow = comp;
        uint64_t m = comp;
        while (m) {
          int v = std::countr_zero(m);
          m &= m - 1;
          grow |= (*adj)[v] & mask;
        }
        if (grow == comp) break;
        comp = grow;
      }
      int value;
      if (comp != mask) {
        value = std::max(run(comp), run(mask & ~comp));
      } else {
        value = 1 + static_cast<int>(std::popcount(mask));
        uint64_t m = mask;
        while (m) {
          int v = std::countr_zero(m);
          m &= m - 1;
          value = std::min(value, 1 + run(mask & ~bit(v)));
        }
      }
      slot = value;
      return value;
    }
  } rec{&adj, &memo};
  return rec.run((size_t{1} << n) - 1);
}

int degeneracy_value(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (int u : g.neighbors(pick))
      if (!gone[u]) --deg[u];
  }
  return best;
}

namespace {
void path_dfs(const Graph& g, int x, int target, int maxlen, std::vector<int>& cur,
              std::vector<char>& on, std::vector<std::vector<int>>& out) {
  if (x == target) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) - 1 == maxlen) return;
  for (int y : g.neighbors(x)) {
    if (on[y]) continue;
    on[y] = 1;
    cur.push_back(y);
    path_dfs(g, y, target, maxlen, cur, on, out);
    cur.pop_back();
    on[y] = 0;
  }
}
}  // namespace

std::vector<std::vector<int>> all_paths(const Graph& g, int u, int v, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{u};
  std::vector<char> on(g.vertex_count(), 0);
  on[u] = 1;
  path_dfs(g, u, v, maxlen, cur, on, out);
  return out;
}

bool naive_centered(const Graph& g, const Coloring& c, int p) {
  int n = g.vertex_count();
  auto adj = masks_of(g);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    if (!mask_connected(mask, adj)) continue;
    std::map<int, int> mult;
    uint64_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      ++mult[c.assignment[v]];
    }
    bool unique = false;
    for (auto [col, k] : mult)
      if (k == 1) unique = true;
    if (!unique && static_cast<int>(mult.size()) < p) return false;
  }
  return true;
}

int optimal_centered_palette(const Graph& g) {
  int n = g.vertex_count();
  // try palettes of growing size; assignments enumerated exhaustively
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colors(n, 0);
    for (;;) {
      Coloring c{colors};
      if (naive_centered(g, c, n + 1)) return k;  // centered = every H has a unique color
      int i = n - 1;
      while (i >= 0 && colors[i] == k - 1) colors[i--] = 0;
      if (i < 0) break;
      ++colors[i];
    }
  }
  return n;
}

namespace {

struct CorpusBuilder {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> perm_edge_map;  // per permutation

  explicit CorpusBuilder(int n_) : n(n_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> edge_index(n * n, -1);
    for (size_t e = 0; e < pairs.size(); ++e) {
      edge_index[pairs[e].first * n + pairs[e].second] = static_cast<int>(e);
      edge_index[pairs[e].second * n + pairs[e].first] = static_cast<int>(e);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> map(pairs.size());
      for (size_t e = 0; e < pairs.size(); ++e)
        map[e] = edge_index[perm[pairs[e].first] * n + perm[pairs[e].second]];
      perm_edge_map.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool canonical(uint32_t mask) const {
    for (const auto& map : perm_edge_map) {
      uint32_t image = 0;
      uint32_t m = mask;
      while (m) {
        int e = std::countr_zero(m);
        m &= m - 1;
        image |= uint32_t{1} << map[e];
      }
      if (image < mask) return false;
    }
    return true;
  }

  bool connected(uint32_t mask) const {
    std::vector<uint64_t> adj(n, 0);
    uint32_t m = mask;
    while (m) {
      int e = std::countr_zero(m);
      m &= m - 1;
      adj[pairs[e].first] |= bit(pairs[e].second);
      adj[pairs[e].second] |= bit(pairs[e].first);
    }
    uint64_t all = bit(n) - 1;
    return mask_connected(all, adj);
  }

  std::vector<Graph> run() const {
    std::vector<Graph> out;
    uint32_t top = uint32_t{1} << pairs.size();
    for (uint32_t mask = 0; mask < top; ++mask) {
      if (!connected(mask)) continue;
      if (!canonical(mask)) continue;
      std::vector<Edge> edges;
      uint32_t m = mask;
      while (m) {
        int e = std::countr_zero(m);
        m &= m - 1;
        edges.push_back(pairs[e]);
      }
      out.push_back(Graph::from_edges(n, std::move(edges)));
    }
    return out;
  }
};

}  // namespace

const std::vector<Graph>& connected_corpus(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, CorpusBuilder(n).run()).first;
  return it->second;
}

Graph random_tree(int n, uint64_t seed) {
  if (n <= 1) return Graph::from_edges(std::max(n, 0), {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<int>(rng() % n);
  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  std::vector<Edge> edges;
  for (int x : prufer) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --deg[leaf];
        --deg[x];
        break;
      }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph::from_edges(n, std::move(edges));
}

Graph planar_fixture(int n, uint64_t seed) {
  // planar 3-tree grown face by face, then a few random edge deletions;
  // subgraphs of planar graphs stay planar
  std::mt19937_64 rng(seed);
  if (n < 3) return random_tree(n, seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    auto face = faces[rng() % faces.size()];
    for (int c : face) edges.emplace_back(std::min(c, v), std::max(c, v));
    faces.push_back({face[0], face[1], v});
    faces.push_back({face[0], face[2], v});
    faces.push_back({face[1], face[2], v});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  int deletions = static_cast<int>(rng() % (edges.size() / 3 + 1));
  for (int i = 0; i < deletions && edges.size() > 1; ++i)
    edges.erase(edges.begin() + rng() % edges.size());
  return Graph::from_edges(n, std::move(edges));
}

Graph random_sparse(int n, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  if (m > static_cast<int>(pairs.size())) m = static_cast<int>(pairs.size());
  pairs.resize(m);
  return Graph::from_edges(n, std::move(pairs));
}

Graph random_connected(int n, uint64_t seed) {
  // random tree plus a few extra edges
  std::mt19937_64 rng(seed);
  auto tree = random_tree(n, rng());
  std::vector<Edge> edges = tree.edges();
  int extra = n <= 2 ? 0 : static_cast<int>(rng() % n);
  for (int i = 0; i < extra; ++i) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace colnum::testsupport
