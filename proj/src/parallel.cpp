#include "spinbath/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinbath {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPINBATH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void for_chunks(int64_t n_items, int n_chunks, int threads,
                const std::function<void(int, int64_t, int64_t)>& fn) {
  if (n_items <= 0) return;
  if (n_chunks > n_items) n_chunks = static_cast<int>(n_items);
  const int64_t base = n_items / n_chunks;
  const int64_t rem = n_items % n_chunks;
  auto bounds = [&](int c) {
    const int64_t begin = c * base + (c < rem ? c : rem);
    const int64_t len = base + (c < rem ? 1 : 0);
    return std::pair<int64_t, int64_t>(begin, begin + len);
  };
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int c = 0; c < n_chunks; ++c) {
      const auto [begin, end] = bounds(c);
      fn(c, begin, end);
    }
    return;
  }
#else
  (void)threads;
#endif
  for (int c = 0; c < n_chunks; ++c) {
    const auto [begin, end] = bounds(c);
    fn(c, begin, end);
  }
}

void parallel_for(int64_t n, int threads, const std::function<void(int64_t)>& fn) {
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)threads;
#endif
  for (int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace spinbath
