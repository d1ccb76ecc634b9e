#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace jcsim {

// Worker count: JCSIM_THREADS caps it, otherwise hardware concurrency.
inline int thread_count() {
  if (const char* s = std::getenv("JCSIM_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Static partition of [0, n) into contiguous ranges; body(lo, hi) per worker.
// Deterministic as long as workers write disjoint outputs.
inline void parallel_for(long n, const std::function<void(long, long)>& body) {
  long nt = std::min<long>(thread_count(), n);
  if (nt <= 1) {
    if (n > 0) body(0, n);
    return;
  }
  long chunk = (n + nt - 1) / nt;
  std::vector<std::thread> pool;
  for (long w = 0; w < nt; ++w) {
    long lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace jcsim
