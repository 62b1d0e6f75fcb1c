#pragma once

#include <atomic>
#include <cstdint>

namespace gyrolab {

// Execution backend for exhaustive scans. The serial backend is the reference
// implementation; the parallel one must return bit-identical results for any
// thread count.
enum class Exec { parallel, serial };

namespace serial {

// Least index in [0, count) where pred reports a violation; count if none.
template <class Pred>
std::uint64_t find_first_violation(std::uint64_t count, Pred&& pred) {
  for (std::uint64_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return count;
}

}  // namespace serial

// OpenMP variant of the scan above. Threads race on an atomic minimum; an
// index is only skipped once a smaller violation is already recorded, so the
// returned index is the true least violation regardless of scheduling.
template <class Pred>
std::uint64_t find_first_violation(std::uint64_t count, Pred&& pred) {
  std::atomic<std::uint64_t> best{count};
  const auto limit = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < limit; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (pred(idx)) {
      std::uint64_t prev = best.load(std::memory_order_relaxed);
      while (idx < prev && !best.compare_exchange_weak(prev, idx)) {
      }
    }
  }
  return best.load();
}

template <class Pred>
std::uint64_t find_first_violation(Exec exec, std::uint64_t count, Pred&& pred) {
  return exec == Exec::serial ? serial::find_first_violation(count, pred)
                              : find_first_violation(count, pred);
}

}  // namespace gyrolab
