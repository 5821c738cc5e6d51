#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace linkcube {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Deterministic blocked map-reduce over [0, n_items).  Work is split into
// fixed-size blocks claimed by a thread pool; partial aggregates are merged
// in block order, so the result is bit-identical for every thread count.
// Agg: default-constructible with merge(const Agg&).
// Body: void(Agg&, uint64_t first, uint64_t last).
template <class Agg, class Body>
Agg blocked_reduce(std::uint64_t n_items, std::uint64_t block_size, unsigned threads,
                   Body&& body) {
  if (n_items == 0) return Agg{};
  if (block_size == 0) block_size = 1;
  std::uint64_t n_blocks = (n_items + block_size - 1) / block_size;
  std::vector<Agg> partial(n_blocks);

  unsigned n_threads = resolve_threads(threads);
  if (n_threads > n_blocks) n_threads = static_cast<unsigned>(n_blocks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    try {
      for (;;) {
        std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= n_blocks || failed.load(std::memory_order_relaxed)) break;
        std::uint64_t first = b * block_size;
        std::uint64_t last = first + block_size;
        if (last > n_items) last = n_items;
        body(partial[b], first, last);
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads - 1);
    for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  Agg total;
  for (auto& p : partial) total.merge(p);
  return total;
}

}  // namespace linkcube
