#include "colnum/cover.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "colnum/admissibility.hpp"
#include "colnum/distance.hpp"
#include "colnum/reach.hpp"

namespace colnum {

std::string Cover::serialize() const {
  std::ostringstream out;
  for (const auto& cluster : clusters) {
    for (size_t i = 0; i < cluster.size(); ++i) {
      if (i) out << ' ';
      out << cluster[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string Cover::summary_json() const {
  std::ostringstream out;
  out << "{\"r\":" << r << ",\"radius\":" << measured_radius << ",\"degree\":" << degree
      << ",\"clusters\":" << clusters.size() << "}";
  return out.str();
}

Cover neighborhood_cover(const Graph& g, const VertexOrder& pi, int r) {
  if (r < 1) throw Error("cover radius must be >= 1");
  int n = g.vertex_count();
  Cover cover;
  cover.r = r;

  // X_v collected by one sweep: a bounded BFS from v among {v} ∪ {larger}
  // finds exactly the w with v in WReach_2r[w]
  std::vector<std::vector<int>> cluster_of(n);
  std::vector<char> allowed(n, 0);
  std::vector<int> owner;  // defining vertex per kept cluster
  for (int pos = n - 1; pos >= 0; --pos) {
    int v = pi.vertex_at(pos);
    allowed[v] = 1;
    auto dist = bfs_within(g, v, allowed);
    std::vector<int> cluster;
    for (int w = 0; w < n; ++w)
      if (dist[w] >= 0 && dist[w] <= 2 * r) cluster.push_back(w);
    if (!cluster.empty()) {
      owner.push_back(v);
      cluster_of[v] = cluster;
      cover.clusters.push_back(std::move(cluster));
    }
  }

  // verification: containment, radius, degree
  DistanceOracle oracle(g);
  std::vector<int> depth_count(n, 0);
  for (const auto& cluster : cover.clusters)
    for (int w : cluster) ++depth_count[w];
  cover.degree = 0;
  for (int w = 0; w < n; ++w) cover.degree = std::max(cover.degree, depth_count[w]);
  int wcol2r = wcol_of_order(g, pi, Radius(2 * r));
  if (cover.degree > wcol2r)
    throw ContractViolation("cover degree exceeds wcol_2r of the order");

  for (size_t i = 0; i < cover.clusters.size(); ++i) {
    const auto& cluster = cover.clusters[i];
    auto sub = g.induced(cluster);
    int center = -1;
    for (size_t j = 0; j < cluster.size(); ++j)
      if (cluster[j] == owner[i]) center = static_cast<int>(j);
    if (center < 0) throw ContractViolation("cover cluster lost its defining vertex");
    auto dist = bfs_all(sub, center);
    int ecc = 0;
    for (int d : dist) {
      if (d < 0) throw ContractViolation("cover cluster is disconnected from its center");
      ecc = std::max(ecc, d);
    }
    cover.measured_radius = std::max(cover.measured_radius, ecc);
  }
  if (cover.measured_radius > 2 * r)
    throw ContractViolation("cover cluster radius exceeds 2r");

  for (int u = 0; u < n; ++u) {
    auto ball = oracle.ball(u, r);
    bool contained = false;
    for (const auto& cluster : cover.clusters) {
      if (std::includes(cluster.begin(), cluster.end(), ball.begin(), ball.end())) {
        contained = true;
        break;
      }
    }
    if (!contained)
      throw ContractViolation("r-ball of vertex " + std::to_string(u) +
                              " lies in no cluster");
  }
  return cover;
}

TraceReport neighborhood_complexity(const Graph& g, const std::vector<int>& A, int r,
                                    const VertexOrder* pi) {
  if (A.empty()) throw Error("parameter set A must be nonempty");
  if (r < 1) throw Error("radius must be >= 1");
  int n = g.vertex_count();
  std::vector<char> in_A(n, 0);
  for (int a : A) in_A[a] = 1;

  DistanceOracle oracle(g);
  std::set<std::vector<int>> traces;
  for (int v = 0; v < n; ++v) {
    std::vector<int> trace;
    for (int u : oracle.ball(v, r))
      if (u != v && in_A[u]) trace.push_back(u);
    traces.insert(std::move(trace));
  }

  TraceReport rep;
  rep.distinct = static_cast<long long>(traces.size());
  VertexOrder order = pi ? *pi : default_order(g, Radius(2 * r));
  rep.wcol_2r = wcol_of_order(g, order, Radius(2 * r));
  int asize = 0;
  for (int v = 0; v < n; ++v) asize += in_A[v];
  rep.bound = 0.5 * std::pow(2.0 * r + 2, rep.wcol_2r) * rep.wcol_2r * asize + 1;
  rep.within = static_cast<double>(rep.distinct) <= rep.bound;
  return rep;
}

}  // namespace colnum
