#include "colnum/admissibility.hpp"

#include <algorithm>

#include "colnum/util.hpp"

namespace colnum {

namespace {

int fan_size(const Graph& g, const std::vector<int>& A, int v, Radius r, FanMode mode,
             int interior_cap) {
  return max_fan(g, A, v, r, mode, interior_cap).size;
}

}  // namespace

int adm_of_order(const Graph& g, const VertexOrder& pi, Radius r, int interior_cap) {
  int n = g.vertex_count();
  int value = 0;
  std::vector<int> prefix;
  prefix.reserve(n);
  for (int i = 0; i < n; ++i) {
    int v = pi.vertex_at(i);
    prefix.push_back(v);
    value = std::max(value, fan_size(g, prefix, v, r, FanMode::exact, interior_cap));
  }
  return value;
}

GreedyAdmResult greedy_adm_order(const Graph& g, Radius r, FanMode mode, int interior_cap) {
  int n = g.vertex_count();
  std::vector<int> remaining;
  remaining.reserve(n);
  for (int v = 0; v < n; ++v) remaining.push_back(v);

  std::vector<int> perm(n);
  int value = 0;
  for (int pos = n - 1; pos >= 0; --pos) {
    // candidate back-connectivities, evaluated in parallel
    std::vector<int> b(remaining.size());
    parallel_for(static_cast<int>(remaining.size()), [&](int i) {
      b[i] = fan_size(g, remaining, remaining[i], r, mode, interior_cap);
    });
    int pick = 0;
    for (size_t i = 1; i < remaining.size(); ++i)
      if (b[i] < b[pick]) pick = static_cast<int>(i);  // ties: smallest id
    value = std::max(value, b[pick]);
    perm[pos] = remaining[pick];
    remaining.erase(remaining.begin() + pick);
  }
  return {VertexOrder::from_permutation(std::move(perm)), value, mode};
}

VertexOrder default_order(const Graph& g, Radius r) {
  int interior = g.vertex_count() - 1;
  FanMode mode = interior <= kDefaultInteriorCap ? FanMode::exact : FanMode::approx;
  return greedy_adm_order(g, r, mode).order;
}

UniversalOrderResult universal_order(const Graph& g, int r_max,
                                     std::vector<long long> schedule, int interior_cap) {
  if (r_max < 1) throw Error("r_max must be >= 1");
  int n = g.vertex_count();

  UniversalOrderResult res;
  if (schedule.empty()) {
    for (int r = 1; r <= r_max; ++r) {
      FanMode mode = (n - 1) <= interior_cap ? FanMode::exact : FanMode::approx;
      int estimate = greedy_adm_order(g, r, mode, interior_cap).value;
      res.schedule.push_back((1LL << (r + 1)) * estimate);
    }
  } else {
    if (static_cast<int>(schedule.size()) != r_max)
      throw Error("schedule must list one threshold per radius 1..r_max");
    res.schedule = std::move(schedule);
  }

  std::vector<int> remaining;
  for (int v = 0; v < n; ++v) remaining.push_back(v);
  std::vector<int> perm(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    int pick = -1;
    while (pick < 0) {
      for (size_t i = 0; i < remaining.size() && pick < 0; ++i) {
        bool ok = true;
        for (int r = 1; r <= r_max && ok; ++r) {
          int b = fan_size(g, remaining, remaining[i], Radius(r), FanMode::exact,
                           interior_cap);
          ok = b <= res.schedule[r - 1];
        }
        if (ok) pick = static_cast<int>(i);
      }
      if (pick < 0) {
        // no vertex qualifies: double every threshold; b <= n always, so
        // this terminates
        for (auto& f : res.schedule) f *= 2;
        ++res.doublings;
      }
    }
    perm[pos] = remaining[pick];
    remaining.erase(remaining.begin() + pick);
  }
  res.order = VertexOrder::from_permutation(std::move(perm));
  for (int r = 1; r <= r_max; ++r)
    res.achieved.push_back(adm_of_order(g, res.order, Radius(r), interior_cap));
  return res;
}

}  // namespace colnum
