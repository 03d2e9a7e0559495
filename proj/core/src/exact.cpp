#include "colnum/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "colnum/fan.hpp"
#include "colnum/reach.hpp"
#include "colnum/util.hpp"

namespace colnum {

namespace {

using std::uint64_t;

// #{u in S : path v->u of length <= budget with internal vertices outside S},
// including v itself; v must lie in S.
int strong_count_mask(const Graph& g, uint64_t S, int v, int budget) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (dist[x] == budget) continue;
    if (x != v && (S & bit(x))) continue;  // endpoints in S are not expanded
    for (int y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
      if (S & bit(y)) ++count;
    }
  }
  return count;
}

// Subset DP for measures whose per-vertex cost depends only on the set of
// smaller vertices.  cost(S, v) is evaluated with v the largest of S.
template <typename Cost>
ExactResult subset_dp(const Graph& g, Cost cost) {
  int n = g.vertex_count();
  if (n == 0) return {0, VertexOrder::identity(0)};
  uint64_t full = (n == 64) ? ~uint64_t{0} : bit(n) - 1;
  std::vector<int> f(full + 1, 0);
  std::vector<int8_t> choice(full + 1, -1);
  for (uint64_t S = 1; S <= full; ++S) {
    int best = -1, pick = -1;
    uint64_t m = S;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int val = std::max(cost(S, v), f[S & ~bit(v)]);
      if (best < 0 || val < best) {
        best = val;
        pick = v;
      }
    }
    f[S] = best;
    choice[S] = static_cast<int8_t>(pick);
  }
  std::vector<int> perm(n);
  uint64_t S = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    int v = choice[S];
    perm[pos] = v;
    S &= ~bit(v);
  }
  return {f[full], VertexOrder::from_permutation(std::move(perm))};
}

// Branch and bound over order prefixes for wcol: counters accumulate as in
// the placement view of weak reachability and never decrease.
struct WcolSearch {
  const Graph* g;
  int n, budget;
  std::vector<int> counter;
  std::vector<char> placed;
  std::vector<int> prefix;
  int best_value;
  std::vector<int> best_perm;

  std::vector<int> ball(int v) const {
    std::vector<int> dist(n, -1), out;
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    out.push_back(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (dist[x] == budget) continue;
      for (int y : g->neighbors(x)) {
        if (placed[y] || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
        out.push_back(y);
      }
    }
    return out;
  }

  void rec(int depth, int frozen_max) {
    if (frozen_max >= best_value) return;
    if (depth == n) {
      best_value = frozen_max;
      best_perm = prefix;
      return;
    }
    int pending = 0;
    for (int x = 0; x < n; ++x)
      if (!placed[x]) pending = std::max(pending, counter[x] + 1);
    if (std::max(frozen_max, pending) >= best_value) return;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      auto b = ball(v);
      for (int x : b) ++counter[x];
      int frozen = counter[v];
      placed[v] = 1;
      prefix.push_back(v);
      rec(depth + 1, std::max(frozen_max, frozen));
      prefix.pop_back();
      placed[v] = 0;
      for (int x : b) --counter[x];
    }
  }
};

ExactResult wcol_exact(const Graph& g, Radius r) {
  int n = g.vertex_count();
  if (n == 0) return {0, VertexOrder::identity(0)};
  WcolSearch s;
  s.g = &g;
  s.n = n;
  s.budget = r.bound(n);
  s.counter.assign(n, 0);
  s.placed.assign(n, 0);
  // seed the incumbent with the degeneracy order
  auto seed = degeneracy_order(g).order;
  s.best_value = wcol_of_order(g, seed, r);
  s.best_perm = seed.permutation();
  s.rec(0, 0);
  return {s.best_value, VertexOrder::from_permutation(std::move(s.best_perm))};
}

ExactResult gcol_exact(const Graph& g, Radius r, int ell) {
  int n = g.vertex_count();
  if (n == 0) return {0, VertexOrder::identity(0)};
  if (n > 8) throw SizeError("exact gcol enumerates all orders; n <= 8 required");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int best = -1;
  std::vector<int> best_perm;
  do {
    auto pi = VertexOrder::from_permutation(perm);
    int val = gcol_of_order(g, pi, r, ell);
    if (best < 0 || val < best) {
      best = val;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, VertexOrder::from_permutation(std::move(best_perm))};
}

}  // namespace

Measure parse_measure(const std::string& name) {
  if (name == "col") return Measure::col;
  if (name == "wcol") return Measure::wcol;
  if (name == "gcol") return Measure::gcol;
  if (name == "adm") return Measure::adm;
  if (name == "treewidth" || name == "tw") return Measure::treewidth;
  if (name == "treedepth" || name == "td") return Measure::treedepth;
  throw Error("unknown measure '" + name + "'");
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::col: return "col";
    case Measure::wcol: return "wcol";
    case Measure::gcol: return "gcol";
    case Measure::adm: return "adm";
    case Measure::treewidth: return "treewidth";
    case Measure::treedepth: return "treedepth";
  }
  return "?";
}

ExactResult exact_parameter(const Graph& g, Radius r, Measure measure, int ell, int cap) {
  int n = g.vertex_count();
  if (n > cap)
    throw SizeError("exact_parameter is exponential; n=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
  if (!r.is_infinite() && r.value() < 1 &&
      (measure == Measure::col || measure == Measure::wcol || measure == Measure::gcol ||
       measure == Measure::adm))
    throw Error("radius must be >= 1");
  int budget = r.bound(n);
  switch (measure) {
    case Measure::col:
      return subset_dp(g, [&](uint64_t S, int v) { return strong_count_mask(g, S, v, budget); });
    case Measure::adm:
      return subset_dp(g, [&](uint64_t S, int v) { return fan_number_mask(g, S, v, budget); });
    case Measure::wcol:
      return wcol_exact(g, r);
    case Measure::gcol:
      return gcol_exact(g, r, ell);
    case Measure::treewidth: {
      auto res = subset_dp(
          g, [&](uint64_t S, int v) { return strong_count_mask(g, S, v, g.vertex_count()); });
      res.value -= 1;
      return res;
    }
    case Measure::treedepth:
      return wcol_exact(g, Radius::infinity());
  }
  throw Error("bad measure");
}

}  // namespace colnum
