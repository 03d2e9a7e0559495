#include "colnum/augmentation.hpp"

#include <algorithm>
#include <sstream>

#include "colnum/reach.hpp"

namespace colnum {

void FraternityFunction::set_weight(int u, int v, int w) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("bad arc");
  if (w < 1 || w > r_) throw Error("fraternity weight outside 1..r");
  weight_[static_cast<size_t>(u) * n_ + v] = w;
}

DiGraph FraternityFunction::level(int i) const {
  DiGraph d(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (finite(u, v) && weight(u, v) <= i) d.add_arc(u, v);
  return d;
}

void FraternityFunction::validate(const Graph& g) const {
  auto fail = [](const std::string& msg) { throw ContractViolation("fraternity: " + msg); };
  if (g.vertex_count() != n_) fail("vertex count mismatch");
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      if (finite(u, v) && finite(v, u)) fail("both directions finite");
      int w = finite(u, v) ? weight(u, v) : (finite(v, u) ? weight(v, u) : 0);
      bool edge = g.has_edge(u, v);
      if (edge && w != 1) fail("graph edge without weight-1 arc");
      if (!edge && w == 1) fail("weight-1 arc without a graph edge");
      // min over common sources; 0 encodes infinity
      long long closure = 0;
      for (int z = 0; z < n_; ++z) {
        if (z == u || z == v) continue;
        if (finite(z, u) && finite(z, v)) {
          long long s = weight(z, u) + weight(z, v);
          if (closure == 0 || s < closure) closure = s;
        }
      }
      if (w == 1) continue;
      if (w == 0) {
        if (closure != 0 && closure <= r_) fail("missing arc for reachable pair");
      } else if (closure != w) {
        fail("arc weight differs from closure minimum");
      }
    }
}

std::string AugmentationSequence::serialize_arcs() const {
  std::ostringstream out;
  for (int u = 0; u < w.vertex_count(); ++u)
    for (int v = 0; v < w.vertex_count(); ++v)
      if (w.finite(u, v)) out << u << " " << v << " " << w.weight(u, v) << "\n";
  return out.str();
}

std::string AugmentationSequence::summary_json() const {
  std::ostringstream out;
  out << "{\"r\":" << r << ",\"levels\":[";
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i) out << ",";
    out << "{\"weight\":" << i + 1 << ",\"arcs\":" << levels[i].arc_count()
        << ",\"max_out_degree\":" << max_out_degree[i] << "}";
  }
  out << "]}";
  return out.str();
}

DiGraph degeneracy_orientation(const Graph& g) {
  auto pi = degeneracy_order(g).order;
  DiGraph d(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (pi.less(v, u))
      d.add_arc(u, v);
    else
      d.add_arc(v, u);
  }
  return d;
}

AugmentationSequence fraternal_augment(const Graph& g, int r, const VertexOrder* initial) {
  if (r < 1) throw Error("radius must be >= 1");
  int n = g.vertex_count();
  AugmentationSequence seq;
  seq.source = g;
  seq.r = r;
  seq.w = FraternityFunction(n, r);

  if (initial) {
    if (initial->size() != n) throw Error("initial order size mismatch");
    for (auto [u, v] : g.edges())
      initial->less(v, u) ? seq.w.set_weight(u, v, 1) : seq.w.set_weight(v, u, 1);
  } else {
    auto d1 = degeneracy_orientation(g);
    for (auto [u, v] : d1.arcs()) seq.w.set_weight(u, v, 1);
  }

  // out-neighbor lists by weight, kept incrementally
  std::vector<std::vector<std::pair<int, int>>> out(n);  // (target, weight)
  auto connected = [&](int u, int v) { return seq.w.finite(u, v) || seq.w.finite(v, u); };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (seq.w.finite(u, v)) out[u].emplace_back(v, 1);

  for (int d = 2; d <= r; ++d) {
    // all pairs with a common source z and weight sum exactly d
    std::vector<Edge> fresh;
    for (int z = 0; z < n; ++z) {
      const auto& oz = out[z];
      for (size_t i = 0; i < oz.size(); ++i)
        for (size_t j = i + 1; j < oz.size(); ++j) {
          auto [u, wu] = oz[i];
          auto [v, wv] = oz[j];
          if (wu + wv != d || connected(u, v)) continue;
          fresh.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    auto aux = Graph::from_edges(n, fresh);
    auto oriented = degeneracy_orientation(aux);
    for (auto [u, v] : oriented.arcs()) {
      seq.w.set_weight(u, v, d);
      out[u].emplace_back(v, d);
    }
  }

  for (int i = 1; i <= r; ++i) {
    seq.levels.push_back(seq.w.level(i));
    seq.max_out_degree.push_back(seq.levels.back().max_out_degree());
  }
  seq.w.validate(g);
  return seq;
}

FraternityFunction fraternity_from_order(const Graph& g, const VertexOrder& pi, int r) {
  if (r < 1) throw Error("radius must be >= 1");
  int n = g.vertex_count();
  FraternityFunction w(n, r);
  for (int u = 0; u < n; ++u) {
    auto dist = strong_reach_distances(g, pi, u, Radius(r));
    for (int v = 0; v < n; ++v)
      if (v != u && dist[v] >= 1 && dist[v] <= r) w.set_weight(u, v, dist[v]);
  }
  w.validate(g);
  return w;
}

AugmentationOrderResult order_from_augmentation(const Graph& g,
                                                const AugmentationSequence& seq) {
  if (seq.source.vertex_count() != g.vertex_count() || seq.source.edges() != g.edges())
    throw Error("augmentation sequence was built for a different graph");
  int n = g.vertex_count();
  int r = seq.r;
  AugmentationOrderResult res;
  res.delta = seq.max_out_degree.empty() ? 0 : seq.max_out_degree.back();

  if (g.edge_count() == 0) {
    // no arcs at all; any order has wcol_r = 1
    res.order = VertexOrder::identity(n);
    res.certified_bound = 1;
    res.achieved_wcol = n > 0 ? 1 : 0;
    return res;
  }

  // weighted-length <= r directed reachability closure
  const DiGraph& top = seq.top();
  std::vector<Edge> closure_edges;
  for (int u = 0; u < n; ++u) {
    // bounded Dijkstra over small integer weights via bucket relaxation
    std::vector<int> dist(n, r + 1);
    dist[u] = 0;
    std::vector<std::vector<int>> bucket(r + 1);
    bucket[0].push_back(u);
    for (int d = 0; d <= r; ++d)
      for (size_t qi = 0; qi < bucket[d].size(); ++qi) {
        int x = bucket[d][qi];
        if (dist[x] != d) continue;
        for (int y : top.out(x)) {
          int nd = d + seq.w.weight(x, y);
          if (nd <= r && nd < dist[y]) {
            dist[y] = nd;
            bucket[nd].push_back(y);
          }
        }
      }
    for (int v = 0; v < n; ++v)
      if (v != u && dist[v] <= r)
        closure_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(closure_edges.begin(), closure_edges.end());
  closure_edges.erase(std::unique(closure_edges.begin(), closure_edges.end()),
                      closure_edges.end());
  auto closure = Graph::from_edges(n, std::move(closure_edges));

  res.order = degeneracy_order(closure).order;
  long long d = r;
  for (int i = 0; i < r; ++i) d *= res.delta;  // d = r * Delta^r
  res.certified_bound = 4 * d * d;
  res.achieved_wcol = wcol_of_order(g, res.order, Radius(r));
  if (res.achieved_wcol > res.certified_bound)
    throw ContractViolation("augmentation order exceeded its certified wcol bound");
  return res;
}

}  // namespace colnum
