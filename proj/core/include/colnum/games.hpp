#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/order.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// Decision rule for one side of a game.  Deterministic given the seed; the
// random rule keys its draws on the game state, so replaying a transcript
// reproduces it exactly.
struct Strategy {
  enum class Rule { order_based, random, greedy, minimax };
  Rule rule = Rule::greedy;
  std::uint64_t seed = 0;
  long long node_cap = 1 << 20;  // minimax fallback threshold
  std::optional<VertexOrder> order;

  static Strategy order_based(VertexOrder pi) {
    Strategy s;
    s.rule = Rule::order_based;
    s.order = std::move(pi);
    return s;
  }
  static Strategy random(std::uint64_t seed) {
    Strategy s;
    s.rule = Rule::random;
    s.seed = seed;
    return s;
  }
  static Strategy greedy() { return {}; }
  static Strategy minimax(long long node_cap = 1 << 20) {
    Strategy s;
    s.rule = Rule::minimax;
    s.node_cap = node_cap;
    return s;
  }
};

struct GameTranscript {
  std::string variant;
  std::string outcome;  // "splitter" | "cops" | "robber" | "unresolved"
  int rounds = 0;
  std::vector<std::string> lines;  // one JSON object per round

  bool resolved() const { return outcome != "unresolved"; }
  // header line then one line per round
  std::string to_jsonl() const;
};

// Radius-r counter game: cops placed in the given sequence; placing v
// increments the counters of the whole r-ball around v in the graph left
// after earlier placements (v included).  Returns the largest counter.
int counter_game(const Graph& g, Radius r, const VertexOrder& placement);

GameTranscript counter_game_transcript(const Graph& g, Radius r,
                                       const VertexOrder& placement);

// Radius-r Splitter game.  Connector picks a vertex of the arena, Splitter
// deletes one vertex of its closed r-ball, and the arena shrinks to that
// ball.  The order-based splitter deletes the ball minimum.
GameTranscript splitter_game(const Graph& g, int r, const Strategy& splitter,
                             const Strategy& connector, int round_cap);

enum class PursuitVariant { agile, inert };

// Bounded-speed cops and robber.  Agile: visible robber, cops announce a
// new set of at most k landing spots, the robber runs along a path of
// length <= r avoiding cops that stay, and must end off the landing spots.
// Inert: the robber is invisible to the cop strategy and moves only when a
// cop is about to land on it.
GameTranscript pursuit_game(const Graph& g, int r, PursuitVariant variant, int cops,
                            const Strategy& cop, const Strategy& robber, int round_cap);

// Exact cop-win decision for the agile game with at most k cops, by
// attractor computation over (cop set, robber position) states.
bool agile_cops_win(const Graph& g, int r, int k, int n_cap = 16);

}  // namespace colnum
