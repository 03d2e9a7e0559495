#include "colnum/fan.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "colnum/util.hpp"

namespace colnum {

namespace {

struct Candidate {
  std::uint64_t mask;  // path vertices excluding the apex
  std::vector<int> path;
};

void enumerate_paths(const Graph& g, std::uint64_t A, int v, int budget,
                     std::vector<int>& path, std::uint64_t mask,
                     std::vector<Candidate>& out) {
  if (static_cast<int>(path.size()) - 1 == budget) return;
  int x = path.back();
  for (int y : g.neighbors(x)) {
    if (y == v || (mask & bit(y))) continue;
    path.push_back(y);
    if (A & bit(y)) {
      out.push_back({mask | bit(y), path});  // endpoint in A, stop here
    } else {
      enumerate_paths(g, A, v, budget, path, mask | bit(y), out);
    }
    path.pop_back();
  }
}

std::vector<Candidate> candidate_paths(const Graph& g, std::uint64_t A, int v, int budget) {
  std::vector<Candidate> cands;
  std::vector<int> path{v};
  enumerate_paths(g, A, v, budget, path, 0, cands);
  // drop candidates whose vertex set contains another's
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return std::popcount(a.mask) < std::popcount(b.mask);
  });
  std::vector<Candidate> kept;
  for (auto& c : cands) {
    bool dominated = false;
    for (const auto& k : kept)
      if ((k.mask & c.mask) == k.mask) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(c));
  }
  return kept;
}

struct Packer {
  const std::vector<Candidate>* cands = nullptr;
  int target = 0;
  int best = 0;
  std::vector<int> current, best_pick;

  void rec(size_t idx, std::uint64_t used) {
    if (best >= target) return;
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_pick = current;
    }
    if (idx == cands->size()) return;
    if (static_cast<int>(current.size() + (cands->size() - idx)) <= best) return;
    const Candidate& c = (*cands)[idx];
    if (!(c.mask & used)) {
      current.push_back(static_cast<int>(idx));
      rec(idx + 1, used | c.mask);
      current.pop_back();
    }
    rec(idx + 1, used);
  }
};

int pack(const std::vector<Candidate>& cands, int target, std::vector<int>* pick) {
  Packer p;
  p.cands = &cands;
  p.target = target;
  p.rec(0, 0);
  if (pick) *pick = p.best_pick;
  return p.best;
}

MaxFanResult exact_fan(const Graph& g, std::uint64_t A, int v, int budget, int interior_cap) {
  int interior = g.vertex_count() - std::popcount(A);
  if (interior > interior_cap)
    throw SizeError("exact fan search over " + std::to_string(interior) +
                    " interior vertices exceeds cap " + std::to_string(interior_cap) +
                    "; use approx mode");
  auto cands = candidate_paths(g, A, v, budget);
  std::vector<int> pick;
  int packed = pack(cands, g.vertex_count() + 1, &pick);
  MaxFanResult res;
  res.mode = FanMode::exact;
  res.size = packed + 1;
  res.fan.apex = v;
  res.fan.paths.push_back({v});  // length-0 path, v in A
  for (int idx : pick) res.fan.paths.push_back(cands[idx].path);
  return res;
}

MaxFanResult approx_fan(const Graph& g, std::uint64_t A, int v, int budget) {
  int n = g.vertex_count();
  std::vector<char> used(n, 0);
  MaxFanResult res;
  res.mode = FanMode::approx;
  res.fan.apex = v;
  res.fan.paths.push_back({v});
  res.size = 1;
  for (;;) {
    // shortest path from v to an unused A-vertex, internally outside A and
    // outside previously peeled paths
    std::vector<int> parent(n, -1), dist(n, -1);
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    int goal = -1;
    while (!q.empty() && goal < 0) {
      int x = q.front();
      q.pop();
      if (dist[x] == budget) break;
      for (int y : g.neighbors(x)) {
        if (used[y] || dist[y] >= 0 || y == v) continue;
        dist[y] = dist[x] + 1;
        parent[y] = x;
        if (A & bit(y)) {
          goal = y;
          break;
        }
        q.push(y);
      }
    }
    if (goal < 0) break;
    std::vector<int> path;
    for (int x = goal; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    for (int x : path)
      if (x != v) used[x] = 1;
    res.fan.paths.push_back(std::move(path));
    ++res.size;
  }
  return res;
}

std::uint64_t to_mask(const std::vector<int>& xs, int n) {
  std::uint64_t m = 0;
  for (int x : xs) {
    if (x < 0 || x >= n) throw Error("vertex out of range: " + std::to_string(x));
    m |= bit(x);
  }
  return m;
}

}  // namespace

MaxFanResult max_fan(const Graph& g, const std::vector<int>& A, int v, Radius r,
                     FanMode mode, int interior_cap) {
  int n = g.vertex_count();
  if (n > 64) throw SizeError("fan search needs n <= 64");
  std::uint64_t Amask = to_mask(A, n);
  if (!(Amask & bit(v))) throw Error("fan apex must belong to A");
  int budget = r.bound(n);
  if (mode == FanMode::exact) return exact_fan(g, Amask, v, budget, interior_cap);
  return approx_fan(g, Amask, v, budget);
}

int fan_number_mask(const Graph& g, std::uint64_t A, int v, int budget) {
  auto cands = candidate_paths(g, A, v, budget);
  return pack(cands, g.vertex_count() + 1, nullptr) + 1;
}

bool fan_valid(const Graph& g, const std::vector<int>& A, Radius r, const Fan& fan,
               std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = g.vertex_count();
  std::uint64_t Amask = to_mask(A, n);
  int budget = r.bound(n);
  std::vector<char> used(n, 0);
  bool trivial_seen = false;
  for (const auto& path : fan.paths) {
    if (path.empty() || path.front() != fan.apex) return fail("path must start at the apex");
    if (static_cast<int>(path.size()) - 1 > budget) return fail("path longer than radius");
    if (path.size() == 1) {
      if (!(Amask & bit(fan.apex))) return fail("length-0 path needs apex in A");
      if (trivial_seen) return fail("duplicate length-0 path");
      trivial_seen = true;
      continue;
    }
    int last = path.back();
    if (!(Amask & bit(last))) return fail("path endpoint outside A");
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) return fail("non-edge on path");
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (Amask & bit(path[i])) return fail("internal vertex inside A");
    std::vector<char> on(n, 0);
    for (int x : path) {
      if (on[x]) return fail("path revisits a vertex");
      on[x] = 1;
    }
    for (int x : path) {
      if (x == fan.apex) continue;
      if (used[x]) return fail("paths share a vertex other than the apex");
      used[x] = 1;
    }
  }
  return true;
}

bool FanSetCertificate::verify(const Graph& g, std::string* why) const {
  for (int a : A) {
    auto it = fans.find(a);
    if (it == fans.end()) {
      if (why) *why = "no fan for vertex " + std::to_string(a);
      return false;
    }
    const Fan& fan = it->second;
    if (fan.apex != a) {
      if (why) *why = "fan apex mismatch at vertex " + std::to_string(a);
      return false;
    }
    if (static_cast<int>(fan.paths.size()) < k) {
      if (why) *why = "fan at vertex " + std::to_string(a) + " smaller than k";
      return false;
    }
    if (!fan_valid(g, A, r, fan, why)) return false;
  }
  return true;
}

std::string FanSetCertificate::to_json() const {
  std::ostringstream out;
  out << "{\"k\":" << k << ",\"r\":\"" << r.str() << "\",\"A\":[";
  for (size_t i = 0; i < A.size(); ++i) {
    if (i) out << ",";
    out << A[i];
  }
  out << "],\"fans\":{";
  bool first = true;
  for (const auto& [apex, fan] : fans) {
    if (!first) out << ",";
    first = false;
    out << "\"" << apex << "\":[";
    for (size_t p = 0; p < fan.paths.size(); ++p) {
      if (p) out << ",";
      out << "[";
      for (size_t i = 0; i < fan.paths[p].size(); ++i) {
        if (i) out << ",";
        out << fan.paths[p][i];
      }
      out << "]";
    }
    out << "]";
  }
  out << "}}";
  return out.str();
}

std::variant<FanSetCertificate, int> verify_fan_set(const Graph& g,
                                                    const std::vector<int>& A, int k,
                                                    Radius r, int interior_cap) {
  if (A.empty()) throw Error("fan set must be nonempty");
  FanSetCertificate cert;
  cert.A = A;
  std::sort(cert.A.begin(), cert.A.end());
  cert.A.erase(std::unique(cert.A.begin(), cert.A.end()), cert.A.end());
  cert.k = k;
  cert.r = r;
  for (int a : cert.A) {
    auto res = max_fan(g, cert.A, a, r, FanMode::exact, interior_cap);
    if (res.size < k) return a;
    res.fan.paths.resize(std::min<size_t>(res.fan.paths.size(), static_cast<size_t>(k)));
    cert.fans[a] = std::move(res.fan);
  }
  return cert;
}

}  // namespace colnum
