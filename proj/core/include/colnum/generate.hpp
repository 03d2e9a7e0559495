#pragma once

#include <cstdint>
#include <random>

#include "colnum/graph.hpp"

namespace colnum {

// Deterministic test-family generators.  Vertex-id conventions:
//   path/cycle     0-1-2-...; cycle closes n-1 to 0
//   clique         all pairs
//   star           leaves 0..k-1, the center is vertex k
//   grid           row-major, vertex r*cols+c
//   complete_bipartite   parts {0..a-1} and {a..a+b-1}
// Random families draw from std::mt19937_64 seeded with the given 64-bit
// seed, so fixtures reproduce bit-exactly across platforms:
//   random_gnp           pairs (i<j) in lexicographic order, the edge is
//                        kept iff (next() >> 11) < p * 2^53
//   bounded_degree_random  all pairs Fisher-Yates-shuffled, then greedily
//                        kept while both endpoint degrees stay below d
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_clique(int n);
Graph make_star(int leaves);
Graph make_grid(int rows, int cols);
Graph make_complete_bipartite(int a, int b);
Graph make_random_gnp(int n, double p, std::uint64_t seed);
Graph make_bounded_degree_random(int n, int max_degree, std::uint64_t seed);

// Dispatch by family name with positional numeric params (sizes, and the
// edge probability for random_gnp).
Graph generate(const std::string& family, const std::vector<double>& params,
               std::uint64_t seed);

}  // namespace colnum
