#include "colnum/games.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <queue>
#include <sstream>

#include "colnum/distance.hpp"
#include "colnum/reach.hpp"
#include "colnum/util.hpp"

namespace colnum {

namespace {

using std::uint64_t;

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> mask_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::string json_list(uint64_t mask) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (int v : mask_vertices(mask)) {
    if (!first) out << ",";
    first = false;
    out << v;
  }
  out << "]";
  return out.str();
}

// closed r-ball around v in the graph induced by `alive`
uint64_t ball_mask(const Graph& g, int v, int budget, uint64_t alive) {
  uint64_t seen = bit(v);
  std::queue<std::pair<int, int>> q;
  q.emplace(v, 0);
  while (!q.empty()) {
    auto [x, d] = q.front();
    q.pop();
    if (d == budget) continue;
    for (int y : g.neighbors(x)) {
      if (!(alive & bit(y)) || (seen & bit(y))) continue;
      seen |= bit(y);
      q.emplace(y, d + 1);
    }
  }
  return seen & alive;
}

}  // namespace

std::string GameTranscript::to_jsonl() const {
  std::ostringstream out;
  out << "{\"variant\":\"" << variant << "\",\"outcome\":\"" << outcome
      << "\",\"rounds\":" << rounds << "}\n";
  for (const auto& line : lines) out << line << "\n";
  return out.str();
}

int counter_game(const Graph& g, Radius r, const VertexOrder& placement) {
  return counter_game_transcript(g, r, placement).rounds;
}

GameTranscript counter_game_transcript(const Graph& g, Radius r,
                                       const VertexOrder& placement) {
  int n = g.vertex_count();
  if (placement.size() != n) throw Error("placement must be a full permutation");
  if (n > 64) throw SizeError("counter game needs n <= 64");
  int budget = r.bound(n);
  uint64_t alive = n == 64 ? ~uint64_t{0} : bit(n) - 1;
  std::vector<int> counter(n, 0);
  GameTranscript t;
  t.variant = "counter";
  int depth = 0;
  for (int i = 0; i < n; ++i) {
    int v = placement.vertex_at(i);
    uint64_t ball = ball_mask(g, v, budget, alive);
    for (int x : mask_vertices(ball)) depth = std::max(depth, ++counter[x]);
    std::ostringstream line;
    line << "{\"round\":" << i + 1 << ",\"cop\":" << v << ",\"ball\":" << json_list(ball)
         << "}";
    t.lines.push_back(line.str());
    alive &= ~bit(v);
  }
  t.outcome = "cops";
  t.rounds = depth;  // the counter-depth of the play
  return t;
}

// ---------------------------------------------------------------- splitter

namespace {

struct SplitterEngine {
  const Graph* g = nullptr;
  int n = 0, r = 1;
  Strategy splitter, connector;
  std::map<uint64_t, int> value_memo;  // both-optimal game value
  std::map<uint64_t, int> best_reply;  // connector move attaining the max

  uint64_t ball(int c, uint64_t arena) const { return ball_mask(*g, c, r, arena); }

  int splitter_move(uint64_t arena, int c) {
    uint64_t b = ball(c, arena);
    auto options = mask_vertices(b);
    switch (splitter.rule) {
      case Strategy::Rule::order_based: {
        const VertexOrder& pi = *splitter.order;
        int best = options[0];
        for (int s : options)
          if (pi.less(s, best)) best = s;
        return best;
      }
      case Strategy::Rule::random:
        return options[splitmix64(splitter.seed ^ arena ^ (uint64_t)c) % options.size()];
      case Strategy::Rule::greedy:
        // largest residual degree inside the ball, smallest id on ties
        return greedy_splitter_move(b, options);
      case Strategy::Rule::minimax: {
        if (over_cap(arena, splitter.node_cap)) return greedy_splitter_move(b, options);
        int best = options[0], bestval = n + 2;
        for (int s : options) {
          int val = game_value((b & ~bit(s)));
          if (val < bestval) {
            bestval = val;
            best = s;
          }
        }
        return best;
      }
    }
    throw Error("bad splitter rule");
  }

  static bool over_cap(uint64_t arena, long long node_cap) {
    int sz = std::popcount(arena);
    return sz >= 62 || (1LL << sz) > node_cap;
  }

  int greedy_splitter_move(uint64_t b, const std::vector<int>& options) const {
    int best = options[0], bestdeg = -1;
    for (int s : options) {
      int deg = 0;
      for (int y : g->neighbors(s))
        if (b & bit(y)) ++deg;
      if (deg > bestdeg) {
        bestdeg = deg;
        best = s;
      }
    }
    return best;
  }

  // rounds to finish under optimal play on both sides
  int game_value(uint64_t arena) {
    if (!arena) return 0;
    auto it = value_memo.find(arena);
    if (it != value_memo.end()) return it->second;
    int best = 0, best_c = -1;
    for (int c : mask_vertices(arena)) {
      uint64_t b = ball(c, arena);
      int worst = n + 2;
      for (int s : mask_vertices(b)) worst = std::min(worst, 1 + game_value(b & ~bit(s)));
      if (worst > best) {
        best = worst;
        best_c = c;
      }
    }
    value_memo[arena] = best;
    best_reply[arena] = best_c;
    return best;
  }

  // rounds the connector can force against the actual (deterministic)
  // splitter strategy
  std::map<uint64_t, int> vs_memo;
  int value_vs_splitter(uint64_t arena) {
    if (!arena) return 0;
    auto it = vs_memo.find(arena);
    if (it != vs_memo.end()) return it->second;
    int best = 0;
    for (int c : mask_vertices(arena)) {
      uint64_t b = ball(c, arena);
      int s = splitter_move(arena, c);
      best = std::max(best, 1 + value_vs_splitter(b & ~bit(s)));
    }
    vs_memo[arena] = best;
    return best;
  }

  int connector_move(uint64_t arena) {
    auto options = mask_vertices(arena);
    switch (connector.rule) {
      case Strategy::Rule::order_based: {
        const VertexOrder& pi = *connector.order;
        int best = options[0];
        for (int c : options)
          if (pi.less(best, c)) best = c;
        return best;
      }
      case Strategy::Rule::random:
        return options[splitmix64(connector.seed ^ arena) % options.size()];
      case Strategy::Rule::greedy: {
        int best = options[0];
        size_t bestsz = 0;
        for (int c : options) {
          size_t sz = static_cast<size_t>(std::popcount(ball(c, arena)));
          if (sz > bestsz) {
            bestsz = sz;
            best = c;
          }
        }
        return best;
      }
      case Strategy::Rule::minimax: {
        if (over_cap(arena, connector.node_cap)) {
          int best = options[0];
          size_t bestsz = 0;
          for (int c : options) {
            size_t sz = static_cast<size_t>(std::popcount(ball(c, arena)));
            if (sz > bestsz) {
              bestsz = sz;
              best = c;
            }
          }
          return best;
        }
        if (splitter.rule == Strategy::Rule::minimax) {
          game_value(arena);
          return best_reply[arena];
        }
        int best = options[0], bestval = -1;
        for (int c : options) {
          uint64_t b = ball(c, arena);
          int s = splitter_move(arena, c);
          int val = 1 + value_vs_splitter(b & ~bit(s));
          if (val > bestval) {
            bestval = val;
            best = c;
          }
        }
        return best;
      }
    }
    throw Error("bad connector rule");
  }
};

}  // namespace

GameTranscript splitter_game(const Graph& g, int r, const Strategy& splitter,
                             const Strategy& connector, int round_cap) {
  int n = g.vertex_count();
  if (n > 64) throw SizeError("splitter game needs n <= 64");
  if (r < 1) throw Error("radius must be >= 1");
  if (round_cap < 1) throw Error("round cap must be >= 1");
  if (splitter.rule == Strategy::Rule::order_based && !splitter.order)
    throw Error("order-based splitter needs an order");
  if (connector.rule == Strategy::Rule::order_based && !connector.order)
    throw Error("order-based connector needs an order");

  SplitterEngine eng;
  eng.g = &g;
  eng.n = n;
  eng.r = r;
  eng.splitter = splitter;
  eng.connector = connector;
  GameTranscript t;
  t.variant = "splitter";
  uint64_t arena = n == 0 ? 0 : (n == 64 ? ~uint64_t{0} : bit(n) - 1);
  int round = 0;
  while (arena && round < round_cap) {
    ++round;
    int c = eng.connector_move(arena);
    uint64_t b = eng.ball(c, arena);
    int s = eng.splitter_move(arena, c);
    arena = b & ~bit(s);
    std::ostringstream line;
    line << "{\"round\":" << round << ",\"connector\":" << c << ",\"splitter\":" << s
         << ",\"arena\":" << json_list(arena) << "}";
    t.lines.push_back(line.str());
  }
  t.rounds = round;
  t.outcome = arena ? "unresolved" : "splitter";
  return t;
}

// ----------------------------------------------------------------- pursuit

namespace {

// attractor over (cop set, robber position) states for the agile game
struct AgileAttractor {
  int n, r, k;
  std::vector<uint64_t> sets;   // all cop sets of size <= k
  std::vector<int> set_id;      // mask -> index
  std::vector<std::vector<uint64_t>> reach;  // [blocked set id][v] = r-ball mask
  std::vector<uint64_t> win;    // [set id] = robber positions the cops win from
  std::vector<std::vector<int>> rank;  // sweep number a state entered the attractor

  AgileAttractor(const Graph& g, int r_, int k_) : n(g.vertex_count()), r(r_), k(k_) {
    if (n > 16) throw SizeError("agile attractor needs n <= 16");
    for (uint64_t m = 0; m < bit(n); ++m)
      if (std::popcount(m) <= k) sets.push_back(m);
    set_id.assign(static_cast<size_t>(1) << n, -1);
    for (size_t i = 0; i < sets.size(); ++i) set_id[sets[i]] = static_cast<int>(i);

    uint64_t full = n == 0 ? 0 : bit(n) - 1;
    reach.assign(sets.size(), std::vector<uint64_t>(n, 0));
    for (size_t b = 0; b < sets.size(); ++b)
      for (int v = 0; v < n; ++v) {
        if (sets[b] & bit(v)) continue;
        reach[b][v] = ball_mask(g, v, r, full & ~sets[b]);
      }

    win.assign(sets.size(), 0);
    rank.assign(sets.size(), std::vector<int>(n, -1));
    bool changed = true;
    int sweep = 0;
    while (changed) {
      changed = false;
      ++sweep;
      for (size_t ci = 0; ci < sets.size(); ++ci) {
        for (int v = 0; v < n; ++v) {
          if (sets[ci] & bit(v)) continue;
          if (win[ci] & bit(v)) continue;
          for (size_t c2 = 0; c2 < sets.size(); ++c2) {
            int blocked = set_id[sets[ci] & sets[c2]];
            uint64_t replies = reach[blocked][v] & ~sets[c2];
            if ((replies & ~win[c2]) == 0) {
              win[ci] |= bit(v);
              rank[ci][v] = sweep;
              changed = true;
              break;
            }
          }
        }
      }
    }
  }

  bool winning(uint64_t cops, int v) const { return win[set_id[cops]] & bit(v); }
};

struct PursuitEngine {
  const Graph* g = nullptr;
  int n = 0, r = 1, k = 1;
  PursuitVariant variant = PursuitVariant::agile;
  Strategy cop, robber;
  std::unique_ptr<AgileAttractor> attractor;  // built lazily for minimax rules
  VertexOrder sweep_order;                    // inert order-based cops
  std::vector<uint64_t> wreach2r;             // agile order-based cop sets

  uint64_t full_mask() const { return n == 0 ? 0 : (n == 64 ? ~uint64_t{0} : bit(n) - 1); }

  void ensure_attractor() {
    if (!attractor) attractor = std::make_unique<AgileAttractor>(*g, r, k);
  }

  uint64_t legal_replies(uint64_t cops, uint64_t landing, int v) const {
    uint64_t blocked = cops & landing;
    if (blocked & bit(v)) return 0;  // cannot happen: robber never rests on a cop
    uint64_t ball = ball_mask(*g, v, r, full_mask() & ~blocked);
    return ball & ~landing;
  }

  // --- cop announcements ---

  uint64_t cop_move_agile(uint64_t cops, int v, int round) {
    switch (cop.rule) {
      case Strategy::Rule::order_based: {
        uint64_t m = wreach2r[v];
        if (std::popcount(m) > k)
          throw Error("cop budget too small for the order strategy at vertex " +
                      std::to_string(v));
        return m;
      }
      case Strategy::Rule::greedy: {
        // k closest vertices to the robber, BFS order
        uint64_t m = 0;
        int taken = 0;
        std::queue<int> q;
        std::vector<char> seen(n, 0);
        q.push(v);
        seen[v] = 1;
        while (!q.empty() && taken < k) {
          int x = q.front();
          q.pop();
          m |= bit(x);
          ++taken;
          for (int y : g->neighbors(x))
            if (!seen[y]) {
              seen[y] = 1;
              q.push(y);
            }
        }
        return m;
      }
      case Strategy::Rule::random: {
        uint64_t key = splitmix64(cop.seed ^ cops ^ (uint64_t(v) << 32) ^ round);
        uint64_t m = 0;
        int taken = 0;
        while (taken < std::min(k, n)) {
          key = splitmix64(key);
          int x = static_cast<int>(key % n);
          if (!(m & bit(x))) {
            m |= bit(x);
            ++taken;
          }
        }
        return m;
      }
      case Strategy::Rule::minimax: {
        ensure_attractor();
        int ci = attractor->set_id[cops];
        if (!(attractor->win[ci] & bit(v))) return cop_greedy_fallback(v);
        // pick the first announcement whose worst reply has the least rank
        int best_rank = attractor->rank[ci][v];
        uint64_t best = 0;
        bool found = false;
        for (size_t c2 = 0; c2 < attractor->sets.size(); ++c2) {
          uint64_t landing = attractor->sets[c2];
          uint64_t replies = legal_replies(cops, landing, v);
          if (replies & ~attractor->win[c2]) continue;
          int worst = 0;
          for (int u : mask_vertices(replies))
            worst = std::max(worst, attractor->rank[c2][u]);
          if (!found || worst < best_rank) {
            best = landing;
            best_rank = worst;
            found = true;
            if (replies == 0) break;
          }
        }
        return found ? best : cop_greedy_fallback(v);
      }
    }
    throw Error("bad cop rule");
  }

  uint64_t cop_greedy_fallback(int v) {
    Strategy saved = cop;
    cop.rule = Strategy::Rule::greedy;
    uint64_t m = cop_move_agile(0, v, 0);
    cop = saved;
    return m;
  }

  uint64_t cop_move_inert(int round) {
    switch (cop.rule) {
      case Strategy::Rule::order_based: {
        // sweep the order from the top; land on the strong reach set of the
        // current target
        int t = std::min(round - 1, n - 1);
        int target = sweep_order.vertex_at(n - 1 - t);
        auto set = strong_reach(*g, sweep_order, target, Radius(r));
        if (static_cast<int>(set.size()) > k)
          throw Error("cop budget too small for the sweep strategy");
        uint64_t m = 0;
        for (int x : set) m |= bit(x);
        return m;
      }
      case Strategy::Rule::random: {
        uint64_t key = splitmix64(cop.seed ^ (uint64_t)round);
        uint64_t m = 0;
        int taken = 0;
        while (taken < std::min(k, n)) {
          key = splitmix64(key);
          int x = static_cast<int>(key % n);
          if (!(m & bit(x))) {
            m |= bit(x);
            ++taken;
          }
        }
        return m;
      }
      case Strategy::Rule::greedy:
      case Strategy::Rule::minimax: {
        // degree-descending sweep; minimax is undefined under invisibility
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        std::stable_sort(verts.begin(), verts.end(),
                         [&](int a, int b) { return g->degree(a) > g->degree(b); });
        uint64_t m = 0;
        for (int i = 0; i < std::min(k, n); ++i)
          m |= bit(verts[(static_cast<size_t>(round - 1) * k + i) % n]);
        return m;
      }
    }
    throw Error("bad cop rule");
  }

  // --- robber ---

  int robber_start() {
    std::vector<int> options;
    for (int v = 0; v < n; ++v) options.push_back(v);
    switch (robber.rule) {
      case Strategy::Rule::order_based: {
        int best = 0;
        for (int v : options)
          if (robber.order->less(best, v)) best = v;
        return best;
      }
      case Strategy::Rule::random:
        return options[splitmix64(robber.seed) % options.size()];
      case Strategy::Rule::greedy: {
        DistanceOracle oracle(*g);
        int best = 0, bestecc = -1;
        for (int v : options) {
          int e = oracle.eccentricity(v);
          if (e > bestecc) {
            bestecc = e;
            best = v;
          }
        }
        return best;
      }
      case Strategy::Rule::minimax: {
        if (variant == PursuitVariant::agile && n <= 16) {
          ensure_attractor();
          for (int v = 0; v < n; ++v)
            if (!attractor->winning(0, v)) return v;
        }
        return survival_start();
      }
    }
    throw Error("bad robber rule");
  }

  // exact best response against memoryless deterministic cops
  bool cops_memoryless() const {
    return variant == PursuitVariant::agile &&
           (cop.rule == Strategy::Rule::order_based || cop.rule == Strategy::Rule::greedy);
  }

  static constexpr int kForever = 1 << 20;
  std::map<std::pair<uint64_t, int>, int> survival_memo;
  std::vector<std::pair<uint64_t, int>> survival_stack;

  int survival(uint64_t cops, int v) {
    auto key = std::make_pair(cops, v);
    auto it = survival_memo.find(key);
    if (it != survival_memo.end()) return it->second;
    for (const auto& s : survival_stack)
      if (s == key) return kForever;  // the robber can loop
    survival_stack.push_back(key);
    uint64_t landing = cop_move_agile(cops, v, 0);
    uint64_t replies = legal_replies(cops, landing, v);
    int best = 0;
    for (int u : mask_vertices(replies))
      best = std::max(best, std::min(kForever, 1 + survival(landing, u)));
    survival_stack.pop_back();
    survival_memo[key] = best;
    return best;
  }

  int survival_start() {
    int best = 0, pick = 0;
    for (int v = 0; v < n; ++v) {
      int s = cops_memoryless() ? survival(0, v) : 0;
      if (s > best) {
        best = s;
        pick = v;
      }
    }
    return pick;
  }

  int robber_move(uint64_t cops, uint64_t landing, int v, int round) {
    uint64_t replies = legal_replies(cops, landing, v);
    if (!replies) return -1;  // captured
    auto options = mask_vertices(replies);
    switch (robber.rule) {
      case Strategy::Rule::order_based: {
        int best = options[0];
        for (int u : options)
          if (robber.order->less(best, u)) best = u;
        return best;
      }
      case Strategy::Rule::random:
        return options[splitmix64(robber.seed ^ cops ^ landing ^ (uint64_t(v) << 24) ^
                                  round) %
                       options.size()];
      case Strategy::Rule::greedy: {
        // farthest from the landing set
        auto dist_to_landing = [&](int u) {
          auto d = bfs_all(*g, u);
          int m = n + 1;
          for (int x : mask_vertices(landing))
            if (d[x] >= 0) m = std::min(m, d[x]);
          return m;
        };
        int best = options[0], bestd = -1;
        for (int u : options) {
          int d = dist_to_landing(u);
          if (d > bestd) {
            bestd = d;
            best = u;
          }
        }
        return best;
      }
      case Strategy::Rule::minimax: {
        if (cops_memoryless()) {
          int best = options[0], bestval = -1;
          for (int u : options) {
            int val = survival(landing, u);
            if (val > bestval) {
              bestval = val;
              best = u;
            }
          }
          return best;
        }
        if (variant == PursuitVariant::agile && n <= 16) {
          ensure_attractor();
          int li = attractor->set_id[landing];
          int best = -1, bestrank = -1;
          for (int u : options) {
            if (!(attractor->win[li] & bit(u))) return u;  // safe forever
            if (attractor->rank[li][u] > bestrank) {
              bestrank = attractor->rank[li][u];
              best = u;
            }
          }
          return best;
        }
        return options.back();
      }
    }
    throw Error("bad robber rule");
  }
};

}  // namespace

GameTranscript pursuit_game(const Graph& g, int r, PursuitVariant variant, int cops,
                            const Strategy& cop, const Strategy& robber, int round_cap) {
  int n = g.vertex_count();
  if (n == 0) throw Error("pursuit needs a nonempty graph");
  if (n > 64) throw SizeError("pursuit game needs n <= 64");
  if (cops < 1) throw Error("cop budget must be >= 1");
  if (r < 1) throw Error("speed must be >= 1");
  if (robber.rule == Strategy::Rule::order_based && !robber.order)
    throw Error("order-based robber needs an order");

  PursuitEngine eng;
  eng.g = &g;
  eng.n = n;
  eng.r = r;
  eng.k = cops;
  eng.variant = variant;
  eng.cop = cop;
  eng.robber = robber;
  if (cop.rule == Strategy::Rule::order_based) {
    VertexOrder pi = cop.order ? *cop.order : VertexOrder::identity(n);
    eng.sweep_order = pi;
    if (variant == PursuitVariant::agile) {
      eng.wreach2r.assign(n, 0);
      for (int v = 0; v < n; ++v) {
        uint64_t m = 0;
        for (int u : weak_reach(g, pi, v, Radius(2 * r))) m |= bit(u);
        eng.wreach2r[v] = m;
      }
    }
  }

  GameTranscript t;
  t.variant = variant == PursuitVariant::agile ? "pursuit-agile" : "pursuit-inert";
  uint64_t ground = 0;  // cops on the ground
  int v = eng.robber_start();
  {
    std::ostringstream line;
    line << "{\"round\":0,\"robber\":" << v << "}";
    t.lines.push_back(line.str());
  }
  for (int round = 1; round <= round_cap; ++round) {
    uint64_t landing = variant == PursuitVariant::agile
                           ? eng.cop_move_agile(ground, v, round)
                           : eng.cop_move_inert(round);
    if (std::popcount(landing) > cops) throw Error("cop strategy exceeded its budget");
    bool must_move = variant == PursuitVariant::agile || (landing & bit(v));
    std::ostringstream line;
    line << "{\"round\":" << round << ",\"cops\":" << json_list(landing);
    if (must_move) {
      int u = eng.robber_move(ground, landing, v, round);
      if (u < 0) {
        line << ",\"captured\":" << v << "}";
        t.lines.push_back(line.str());
        t.outcome = "cops";
        t.rounds = round;
        return t;
      }
      v = u;
    }
    line << ",\"robber\":" << v << "}";
    t.lines.push_back(line.str());
    ground = landing;
  }
  t.outcome = "unresolved";
  t.rounds = round_cap;
  return t;
}

bool agile_cops_win(const Graph& g, int r, int k, int n_cap) {
  int n = g.vertex_count();
  if (n > n_cap || n > 16)
    throw SizeError("agile attractor is exponential; n=" + std::to_string(n));
  if (k >= n) return true;
  AgileAttractor at(g, r, k);
  for (int v = 0; v < n; ++v)
    if (!at.winning(0, v)) return false;
  return true;
}

}  // namespace colnum
