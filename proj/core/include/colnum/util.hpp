#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace colnum {

// Process-wide bound on internal parallelism.  1 (the default) keeps every
// operation single-threaded; results are identical for any setting.
void set_threads(int n);
int threads();

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks so
// that writes to pre-sized output slots stay deterministic.
void parallel_for(int count, const std::function<void(int)>& fn);

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace colnum
