#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/radius.hpp"

namespace colnum {

// Depth-r v-A fan: paths from the apex into A, internally disjoint from A,
// pairwise sharing only the apex.  When the apex lies in A the length-0
// path {apex} is one of them.
struct Fan {
  int apex = -1;
  std::vector<std::vector<int>> paths;  // each starts at apex
};

enum class FanMode { exact, approx };

struct MaxFanResult {
  int size = 0;
  Fan fan;
  FanMode mode = FanMode::exact;
};

inline constexpr int kDefaultInteriorCap = 12;

// b_r(A, v): maximum size of a depth-r v-A fan.  Exact mode packs candidate
// paths exhaustively (exponential; refuses when more than `interior_cap`
// vertices lie outside A).  Approx mode peels shortest paths greedily; the
// returned size s satisfies s <= b_r(A,v) <= r*s.
MaxFanResult max_fan(const Graph& g, const std::vector<int>& A, int v, Radius r,
                     FanMode mode, int interior_cap = kDefaultInteriorCap);

// Checks every fan invariant against the graph.
bool fan_valid(const Graph& g, const std::vector<int>& A, Radius r, const Fan& fan,
               std::string* why = nullptr);

struct FanSetCertificate {
  std::vector<int> A;
  int k = 0;
  Radius r;
  std::map<int, Fan> fans;  // one fan of size >= k per element of A

  bool verify(const Graph& g, std::string* why = nullptr) const;
  std::string to_json() const;
};

// Certificate that A is a (k,r)-fan set, or some vertex of A whose maximum
// fan falls short.
std::variant<FanSetCertificate, int> verify_fan_set(const Graph& g,
                                                    const std::vector<int>& A, int k,
                                                    Radius r,
                                                    int interior_cap = kDefaultInteriorCap);

// Exact b_r for bitmask sets, used by the brute-force order search.
int fan_number_mask(const Graph& g, std::uint64_t A, int v, int budget);

}  // namespace colnum
