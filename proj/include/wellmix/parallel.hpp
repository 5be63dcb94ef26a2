#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wellmix {

// Resolves a worker count: explicit request wins, then WELLMIX_THREADS,
// then 1. A value of 0 means "not specified".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WELLMIX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// Splits [begin, end) into one contiguous chunk per worker and invokes
// fn(chunk_index, lo, hi) on each. Callers merge per-chunk results in
// chunk_index order, which keeps every reduction deterministic.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads, Fn&& fn) {
  const std::uint64_t total = end > begin ? end - begin : 0;
  int workers = resolve_threads(threads);
  if (static_cast<std::uint64_t>(workers) > total) workers = total > 0 ? static_cast<int>(total) : 1;
  if (workers <= 1) {
    fn(0, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t step = total / workers;
  const std::uint64_t rem = total % workers;
  std::uint64_t lo = begin;
  for (int i = 0; i < workers; ++i) {
    const std::uint64_t hi = lo + step + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
    pool.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace wellmix
