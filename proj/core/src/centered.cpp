#include "colnum/centered.hpp"

#include <algorithm>
#include <bit>

#include "colnum/admissibility.hpp"
#include "colnum/digraph.hpp"
#include "colnum/exact.hpp"
#include "colnum/reach.hpp"
#include "colnum/util.hpp"

namespace colnum {

std::vector<int> EliminationForest::ancestors(int v) const {
  std::vector<int> out;
  for (int x = v; x != -1; x = parent[x]) out.push_back(x);
  return out;
}

void EliminationForest::validate(const Graph& g) const {
  int n = g.vertex_count();
  int max_depth = 0;
  for (int v = 0; v < n; ++v) {
    int hops = 0;
    for (int x = v; x != -1; x = parent[x])
      if (++hops > n) throw ContractViolation("forest parent map has a cycle");
    max_depth = std::max(max_depth, hops);
  }
  if (max_depth != depth) throw ContractViolation("forest depth mismatch");
  for (auto [u, v] : g.edges()) {
    bool related = false;
    for (int x = u; x != -1; x = parent[x]) related |= (x == v);
    for (int x = v; x != -1; x = parent[x]) related |= (x == u);
    if (!related)
      throw ContractViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " not covered by the forest");
  }
}

EliminationForest elimination_forest(const Graph& g, const VertexOrder& pi) {
  int n = g.vertex_count();
  EliminationForest f;
  f.parent.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    auto reach = weak_reach(g, pi, v, Radius::infinity());
    f.depth = std::max(f.depth, static_cast<int>(reach.size()));
    int best = -1;
    for (int u : reach)
      if (u != v && (best == -1 || pi.less(best, u))) best = u;
    f.parent[v] = best;
  }
  f.validate(g);
  return f;
}

namespace {

struct CenteredScan {
  const Graph* g;
  const Coloring* c;
  int p;
  std::vector<std::uint64_t> adj;
  std::uint64_t violation = 0;

  // color statistics of a vertex mask
  bool satisfied(std::uint64_t S) const {
    int palette = c->palette();
    std::vector<int> mult(palette, 0);
    std::uint64_t m = S;
    int distinct = 0;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (++mult[(*c).assignment[v]] == 1) ++distinct;
    }
    if (distinct >= p) return true;
    for (int col = 0; col < palette; ++col)
      if (mult[col] == 1) return true;
    return false;
  }

  int distinct_colors(std::uint64_t S) const {
    std::uint64_t seen = 0;
    std::uint64_t m = S;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      seen |= bit((*c).assignment[v]);
    }
    return std::popcount(seen);
  }

  // grow connected sets containing `S`; banned vertices stay out; every
  // superset of a set showing >= p colors already satisfies the check
  bool grow(std::uint64_t S, std::uint64_t banned, std::uint64_t floor_mask) {
    if (!satisfied(S)) {
      violation = S;
      return false;
    }
    if (distinct_colors(S) >= p) return true;  // prune: supersets stay fine
    std::uint64_t nbr = 0;
    std::uint64_t m = S;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      nbr |= adj[v];
    }
    std::uint64_t frontier = nbr & ~S & ~banned & ~floor_mask;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (!grow(S | bit(x), banned, floor_mask)) return false;
      banned |= bit(x);
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> verify_centered(const Graph& g, const Coloring& c, int p,
                                                int cap) {
  int n = g.vertex_count();
  if (p < 1) throw Error("p must be >= 1");
  if (n > cap)
    throw SizeError("verify_centered enumerates connected subgraphs; n=" +
                    std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (static_cast<int>(c.assignment.size()) != n) throw Error("coloring size mismatch");
  if (c.palette() > 64) throw SizeError("verify_centered supports palettes up to 64");

  auto adj = g.adjacency_masks();
  // enumeration roots run independently, so they parallelize; the smallest
  // root's violation is kept for determinism
  std::vector<std::uint64_t> violations(n, 0);
  parallel_for(n, [&](int v) {
    CenteredScan scan{&g, &c, p, adj, 0};
    std::uint64_t floor_mask = bit(v) - 1;
    scan.grow(bit(v), 0, floor_mask);
    violations[v] = scan.violation;
  });
  std::uint64_t found = 0;
  for (int v = 0; v < n && !found; ++v) found = violations[v];
  if (!found) return std::nullopt;
  CenteredScan scan{&g, &c, p, adj, 0};

  // shrink to an inclusion-minimal violating set
  std::uint64_t S = found;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::uint64_t m = S;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      std::uint64_t T = S & ~bit(v);
      if (!T) continue;
      // connected?
      std::vector<int> verts;
      std::uint64_t t = T;
      while (t) {
        verts.push_back(std::countr_zero(t));
        t &= t - 1;
      }
      auto sub = g.induced(verts);
      if (!sub.connected()) continue;
      if (!scan.satisfied(T)) {
        S = T;
        shrunk = true;
        break;
      }
    }
  }
  std::vector<int> out;
  while (S) {
    out.push_back(std::countr_zero(S));
    S &= S - 1;
  }
  return out;
}

Coloring p_centered_zhu(const Graph& g, int p, const std::optional<VertexOrder>& pi,
                        int verify_cap) {
  if (p < 2) throw Error("p must be >= 2");
  if (p > 12) throw Error("p-centered radius 2^{p-2} too large; p <= 12 required");
  Radius radius(1 << (p - 2));
  VertexOrder order = pi ? *pi : default_order(g, radius);
  auto c = reach_graph_coloring(g, order, radius);
  if (verify_centered(g, c, p, verify_cap))
    throw ContractViolation("Zhu coloring failed the p-centered check");
  return c;
}

std::optional<TreedepthColoringViolation> verify_treedepth_coloring(const Graph& g,
                                                                    const Coloring& c, int p) {
  int n = g.vertex_count();
  if (static_cast<int>(c.assignment.size()) != n) throw Error("coloring size mismatch");
  std::vector<int> used;
  for (int v = 0; v < n; ++v) used.push_back(c.assignment[v]);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  int k = static_cast<int>(used.size());

  for (int i = 1; i <= std::min(p, k); ++i) {
    // all i-subsets of used colors
    std::vector<int> idx(i);
    for (int j = 0; j < i; ++j) idx[j] = j;
    for (;;) {
      std::vector<int> colors;
      for (int j : idx) colors.push_back(used[j]);
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (std::binary_search(colors.begin(), colors.end(), c.assignment[v]))
          verts.push_back(v);
      auto sub = g.induced(verts);
      int td = exact_parameter(sub, Radius::infinity(), Measure::treedepth, 0,
                               std::max(kDefaultExactCap, 12))
                   .value;
      if (td > i) return TreedepthColoringViolation{colors, td};
      // next combination
      int j = i - 1;
      while (j >= 0 && idx[j] == k - i + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return std::nullopt;
}

Coloring centered_from_treedepth(const Graph& g, const Coloring& c, int p, int verify_cap) {
  if (p < 2) throw Error("p must be >= 2");
  if (auto bad = verify_treedepth_coloring(g, c, p))
    throw Error("input coloring is not p-treedepth (a class union has treedepth " +
                std::to_string(bad->treedepth) + ")");
  int n = g.vertex_count();

  // dense recoloring 0..k-1
  std::vector<int> used;
  for (int v = 0; v < n; ++v) used.push_back(c.assignment[v]);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  int k = static_cast<int>(used.size());
  std::vector<int> dense(n);
  for (int v = 0; v < n; ++v)
    dense[v] = static_cast<int>(std::lower_bound(used.begin(), used.end(), c.assignment[v]) -
                                used.begin());

  if (k <= p) {
    // the whole graph already has treedepth <= k: coloring by forest depth
    // is centered outright
    auto witness = exact_parameter(g, Radius::infinity(), Measure::treedepth, 0,
                                   std::max(kDefaultExactCap, 12))
                       .witness;
    auto forest = elimination_forest(g, witness);
    Coloring out;
    out.assignment.assign(n, 0);
    for (int v = 0; v < n; ++v)
      out.assignment[v] = static_cast<int>(forest.ancestors(v).size()) - 1;
    if (out.palette() > k)
      throw ContractViolation("depth coloring exceeded the treedepth palette");
    if (verify_centered(g, out, p + 1, verify_cap))
      throw ContractViolation("depth coloring is not centered");
    return out;
  }

  // ancestor digraph over all p-subsets of colors
  int q = p;
  DiGraph anc(n);
  std::vector<int> idx(q);
  for (int j = 0; j < q; ++j) idx[j] = j;
  for (;;) {
    std::vector<char> chosen(k, 0);
    for (int j : idx) chosen[j] = 1;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (chosen[dense[v]]) verts.push_back(v);

    auto sub = g.induced(verts);
    auto witness =
        exact_parameter(sub, Radius::infinity(), Measure::treedepth, 0,
                        std::max(kDefaultExactCap, 12))
            .witness;
    auto forest = elimination_forest(sub, witness);
    for (size_t local = 0; local < verts.size(); ++local)
      for (int a = forest.parent[static_cast<int>(local)]; a != -1; a = forest.parent[a])
        anc.add_arc(verts[local], verts[a]);

    int j = q - 1;
    while (j >= 0 && idx[j] == k - q + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < q; ++l) idx[l] = idx[l - 1] + 1;
  }

  // proper coloring of the underlying undirected ancestor graph
  std::vector<Edge> hedges;
  for (auto [u, v] : anc.arcs()) hedges.emplace_back(std::min(u, v), std::max(u, v));
  auto h = Graph::from_edges(n, std::move(hedges));
  auto gamma = first_fit(h, degeneracy_order(h).order);

  Coloring out;
  out.assignment.assign(n, 0);
  int gp = gamma.palette();
  for (int v = 0; v < n; ++v) out.assignment[v] = dense[v] * gp + gamma.assignment[v];
  // compact unused product colors
  std::vector<int> remap(static_cast<size_t>(k) * gp, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int& slot = remap[out.assignment[v]];
    if (slot < 0) slot = next++;
  }
  for (int v = 0; v < n; ++v) out.assignment[v] = remap[out.assignment[v]];

  long long budget = static_cast<long long>(k) * (2LL * p * binomial(k - 1, p - 1) + 1);
  if (out.palette() > budget)
    throw ContractViolation("centered_from_treedepth exceeded its palette bound");
  if (verify_centered(g, out, p + 1, verify_cap))
    throw ContractViolation("centered_from_treedepth output is not (p+1)-centered");
  return out;
}

}  // namespace colnum
