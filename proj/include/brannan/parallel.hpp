#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace brannan::par {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BRANNAN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Chunked parallel loop over [0, n).  Each worker owns a contiguous chunk and
// a local accumulator; the caller merges the per-chunk results afterwards.
// The merge input order is fixed (chunk index), so any reduction is
// reproducible regardless of scheduling; reductions used here are total-order
// minima, which are order-independent anyway.
template <class Local>
std::vector<Local> chunked_for(long n, int threads,
                               const std::function<void(long, long, Local&)>& body) {
  threads = std::max<long>(1, std::min<long>(threads, n > 0 ? n : 1));
  std::vector<Local> locals(threads);
  if (threads == 1) {
    body(0, n, locals[0]);
    return locals;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long lo = t * chunk;
    const long hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi, t] {
      if (lo < hi) body(lo, hi, locals[t]);
    });
  }
  for (auto& th : pool) th.join();
  return locals;
}

}  // namespace brannan::par
