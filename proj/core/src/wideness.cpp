#include "colnum/wideness.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "colnum/distance.hpp"
#include "colnum/util.hpp"

namespace colnum {

namespace {

std::vector<int> greedy_far_set(const Graph& g, const std::vector<int>& A, int r,
                                const std::vector<char>& deleted) {
  std::vector<int> B;
  std::vector<char> alive(g.vertex_count(), 1);
  for (int v = 0; v < g.vertex_count(); ++v) alive[v] = !deleted[v];
  for (int a : A) {
    if (deleted[a]) continue;
    bool ok = true;
    auto dist = bfs_within(g, a, alive);
    for (int b : B)
      if (dist[b] >= 0 && dist[b] <= r) {
        ok = false;
        break;
      }
    if (ok) B.push_back(a);
  }
  return B;
}

}  // namespace

bool WidenessCertificate::verify(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<char> in_A(g.vertex_count(), 0), in_S(g.vertex_count(), 0);
  for (int a : A) in_A[a] = 1;
  for (int s : S) in_S[s] = 1;
  for (int b : B) {
    if (!in_A[b]) return fail("B contains a vertex outside A");
    if (in_S[b]) return fail("B meets the deleted set");
  }
  if (static_cast<int>(B.size()) < m) return fail("B is smaller than m");
  std::vector<char> alive(g.vertex_count(), 1);
  for (int s : S) alive[s] = 0;
  for (size_t i = 0; i < B.size(); ++i) {
    auto dist = bfs_within(g, B[i], alive);
    for (size_t j = i + 1; j < B.size(); ++j)
      if (dist[B[j]] >= 0 && dist[B[j]] <= r)
        return fail("vertices " + std::to_string(B[i]) + " and " + std::to_string(B[j]) +
                    " are within distance r");
  }
  return true;
}

std::string WidenessCertificate::to_json() const {
  auto list = [](const std::vector<int>& xs) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) out << ",";
      out << xs[i];
    }
    out << "]";
    return out.str();
  };
  std::ostringstream out;
  out << "{\"r\":" << r << ",\"m\":" << m << ",\"A\":" << list(A) << ",\"S\":" << list(S)
      << ",\"B\":" << list(B) << "}";
  return out.str();
}

std::variant<WidenessCertificate, WidenessFailure> uqw_extract(const Graph& g,
                                                               const std::vector<int>& A,
                                                               int r, int m, int s_budget) {
  if (m < 1) throw Error("target m must be >= 1");
  if (s_budget < 0) throw Error("deletion budget must be >= 0");
  int n = g.vertex_count();
  std::vector<int> A_sorted(A);
  std::sort(A_sorted.begin(), A_sorted.end());
  A_sorted.erase(std::unique(A_sorted.begin(), A_sorted.end()), A_sorted.end());

  std::vector<char> deleted(n, 0);
  std::vector<int> S;
  WidenessFailure best{0, 0};

  auto make_cert = [&](std::vector<int> B) {
    WidenessCertificate cert;
    cert.A = A_sorted;
    cert.r = r;
    cert.m = m;
    cert.S = S;
    cert.B = std::move(B);
    std::string why;
    if (!cert.verify(g, &why)) throw ContractViolation("uqw certificate invalid: " + why);
    return cert;
  };

  for (;;) {
    auto B = greedy_far_set(g, A_sorted, r, deleted);
    if (static_cast<int>(B.size()) > best.best_b) {
      best.best_b = static_cast<int>(B.size());
      best.used_s = static_cast<int>(S.size());
    }
    if (static_cast<int>(B.size()) >= m) return make_cert(std::move(B));
    if (static_cast<int>(S.size()) >= s_budget) break;
    // promote the heaviest bottleneck: the vertex with the most remaining
    // A-vertices within distance r
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) alive[v] = !deleted[v];
    int pick = -1, pick_score = -1;
    for (int x = 0; x < n; ++x) {
      if (deleted[x]) continue;
      auto dist = bfs_within(g, x, alive);
      int score = 0;
      for (int a : A_sorted)
        if (!deleted[a] && a != x && dist[a] >= 0 && dist[a] <= r) ++score;
      if (score > pick_score) {
        pick_score = score;
        pick = x;
      }
    }
    if (pick < 0 || pick_score == 0) break;
    deleted[pick] = 1;
    S.push_back(pick);
  }

  // exhaustive fallback at desk scale: all deletion sets within budget, max
  // independent subset by subset scan
  if (n <= 10) {
    DistanceOracle base(g);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    for (std::uint64_t smask = 0; smask < bit(n); ++smask) {
      if (std::popcount(smask) > s_budget) continue;
      std::vector<char> alive(n, 1);
      std::vector<int> Sx;
      for (int v = 0; v < n; ++v)
        if (smask & bit(v)) {
          alive[v] = 0;
          Sx.push_back(v);
        }
      // pairwise distances in G - S among A
      std::vector<int> cand;
      for (int a : A_sorted)
        if (alive[a]) cand.push_back(a);
      int ac = static_cast<int>(cand.size());
      if (ac < m) continue;
      std::vector<std::uint64_t> conflict(ac, 0);
      for (int i = 0; i < ac; ++i) {
        auto dist = bfs_within(g, cand[i], alive);
        for (int j = 0; j < ac; ++j)
          if (j != i && dist[cand[j]] >= 0 && dist[cand[j]] <= r) conflict[i] |= bit(j);
      }
      for (std::uint64_t bmask = 0; bmask < bit(ac); ++bmask) {
        if (std::popcount(bmask) < m) continue;
        bool indep = true;
        for (int i = 0; i < ac && indep; ++i)
          if ((bmask & bit(i)) && (conflict[i] & bmask)) indep = false;
        if (!indep) continue;
        S = Sx;
        std::vector<int> B;
        for (int i = 0; i < ac; ++i)
          if (bmask & bit(i)) B.push_back(cand[i]);
        return make_cert(std::move(B));
      }
    }
  }
  return best;
}

}  // namespace colnum
