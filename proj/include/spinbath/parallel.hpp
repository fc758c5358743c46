#pragma once

#include <cstdint>
#include <functional>

namespace spinbath {

/// requested <= 0 means "use $SPINBATH_THREADS, else all hardware threads".
int resolve_threads(int requested);

/// Runs fn(chunk_index, begin, end) over `n_items` split into `n_chunks`
/// fixed contiguous ranges. Chunk boundaries depend only on (n_items,
/// n_chunks), never on the thread count, so per-chunk accumulators reduced in
/// chunk order give bit-identical results for any `threads`.
void for_chunks(int64_t n_items, int n_chunks, int threads,
                const std::function<void(int, int64_t, int64_t)>& fn);

/// Plain parallel loop for independent slots (each i writes only its own
/// output).
void parallel_for(int64_t n, int threads, const std::function<void(int64_t)>& fn);

inline constexpr int kDefaultChunks = 64;

}  // namespace spinbath
