#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace grunwald {

/// Run fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency).  Work is handed out through an atomic counter; fn must write
/// its result into caller-owned, index-addressed storage so that assembly
/// order stays deterministic.  The first exception thrown by any worker is
/// rethrown on the calling thread.
template <class Fn>
void parallel_for_index(int count, Fn&& fn, unsigned threads = 0) {
  if (count <= 0) return;
  unsigned hw = threads ? threads : std::thread::hardware_concurrency();
  if (hw <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  hw = std::min<unsigned>(hw, static_cast<unsigned>(count));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || failed.load(std::memory_order_relaxed)) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(hw);
  for (unsigned t = 0; t < hw; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace grunwald
