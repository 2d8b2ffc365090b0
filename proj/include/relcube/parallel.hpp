#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace relcube {

inline int default_workers() {
  if (const char* env = std::getenv("RELCUBE_WORKERS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

inline int resolve_workers(int requested) {
  return requested > 0 ? requested : default_workers();
}

// Splits [0, count) into contiguous chunks and runs body(acc, begin, end) on
// each, returning the per-chunk accumulators in chunk order. Accumulators must
// be merged by the caller with an operation whose result does not depend on
// the chunking (integer sums, or merge-then-sort), so output is identical for
// any worker count.
template <typename Acc, typename Body>
std::vector<Acc> parallel_accumulate(std::uint64_t count, int workers, Acc init, Body&& body) {
  int used = static_cast<int>(
      std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(count, 1)));
  std::vector<Acc> acc(used, init);
  if (used <= 1) {
    body(acc[0], std::uint64_t{0}, count);
    return acc;
  }
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (int w = 0; w < used; ++w) {
    std::uint64_t begin = count * w / used;
    std::uint64_t end = count * (w + 1) / used;
    pool.emplace_back([&body, &acc, w, begin, end] { body(acc[w], begin, end); });
  }
  for (auto& t : pool) t.join();
  return acc;
}

}  // namespace relcube
