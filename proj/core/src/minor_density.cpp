#include "colnum/minor_density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "colnum/util.hpp"

namespace colnum {

namespace {

using std::uint64_t;

struct Block {
  uint64_t mask;
  uint64_t nbr;  // neighborhood closure outside the block
};

bool mask_connected(uint64_t mask, const std::vector<uint64_t>& adj) {
  if (mask == 0) return false;
  int start = std::countr_zero(mask);
  uint64_t seen = bit(start), frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v] & mask;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

// radius of G[mask] measured from its best center
bool radius_at_most(uint64_t mask, int r, const std::vector<uint64_t>& adj) {
  uint64_t m = mask;
  while (m) {
    int c = std::countr_zero(m);
    m &= m - 1;
    uint64_t seen = bit(c);
    for (int step = 0; step < r && seen != mask; ++step) {
      uint64_t grow = seen;
      uint64_t f = seen;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grow |= adj[v] & mask;
      }
      if (grow == seen) break;
      seen = grow;
    }
    if (seen == mask) return true;
  }
  return false;
}

struct Search {
  int n;
  std::vector<uint64_t> chosen_masks;
  long long edges = 0;
  long long best_num = 0, best_den = 1;
  std::vector<uint64_t> best;

  void consider() {
    if (chosen_masks.empty()) return;
    long long num = edges, den = static_cast<long long>(chosen_masks.size());
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best.assign(chosen_masks.begin(), chosen_masks.end());
    }
  }

  void rec(uint64_t decided, const std::vector<std::vector<Block>>& groups) {
    consider();
    uint64_t undecided = ~decided & ((n == 64 ? ~uint64_t{0} : bit(n) - 1));
    if (!undecided) return;
    int v = std::countr_zero(undecided);
    // v joins no branch set
    rec(decided | bit(v), groups);
    // or v is the minimum of a fresh branch set
    for (const Block& b : groups[v]) {
      if (b.mask & decided) continue;
      int adjacent = 0;
      for (uint64_t other : chosen_masks)
        if (b.nbr & other) ++adjacent;
      chosen_masks.push_back(b.mask);
      edges += adjacent;
      rec(decided | b.mask, groups);
      edges -= adjacent;
      chosen_masks.pop_back();
    }
  }
};

}  // namespace

MinorWitness nabla_exact(const Graph& g, int r, int cap) {
  int n = g.vertex_count();
  if (r < 0) throw Error("nabla rank must be >= 0");
  if (n > cap)
    throw SizeError("nabla_exact is exponential; n=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
  MinorWitness out;
  if (n == 0) return out;

  auto adj = g.adjacency_masks();
  std::vector<std::vector<Block>> groups(n);
  for (uint64_t mask = 1; mask < bit(n); ++mask) {
    if (!mask_connected(mask, adj)) continue;
    if (!radius_at_most(mask, r, adj)) continue;
    uint64_t nbr = 0;
    uint64_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      nbr |= adj[v];
    }
    nbr &= ~mask;
    groups[std::countr_zero(mask)].push_back({mask, nbr});
  }

  Search s;
  s.n = n;
  s.rec(0, groups);

  out.density = Rational(s.best_num, s.best_den == 0 ? 1 : s.best_den);
  for (uint64_t mask : s.best) {
    std::vector<int> set;
    while (mask) {
      set.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    out.branch_sets.push_back(std::move(set));
  }
  return out;
}

}  // namespace colnum
