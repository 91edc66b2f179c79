#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "lures/verdict.hpp"

namespace lures {

/// Scans outer indices 0..count-1, where `scan(i)` returns the first failure
/// whose leading coordinate is i (or nothing). Returns the failure with the
/// smallest leading coordinate, so the result does not depend on `jobs`.
template <class Scan>
std::optional<Witness> first_failure(std::size_t count, unsigned jobs, Scan&& scan) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto w = scan(i)) return w;
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::optional<Witness> best_witness;
  std::mutex mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (auto w = scan(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          best_witness = std::move(w);
        }
        return;
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(jobs, count);
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return best_witness;
}

}  // namespace lures
