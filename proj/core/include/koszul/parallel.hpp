#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace koszul {

// Runs fn(i) for i in [0, n) on `threads` workers.  Results land in a slot
// per index, so aggregation order never depends on scheduling; a throwing
// item poisons only its own slot.  Worker count changes wall time, nothing
// else.
struct ItemFailure {
  std::size_t index;
  std::string message;
};

template <typename T>
struct ParallelResult {
  std::vector<T> values;          // default-constructed on failure
  std::vector<ItemFailure> failures;  // sorted by index
  bool ok() const { return failures.empty(); }
};

template <typename T>
ParallelResult<T> run_indexed(std::size_t n, unsigned threads,
                              const std::function<T(std::size_t)>& fn) {
  ParallelResult<T> out;
  out.values.resize(n);
  if (threads == 0) threads = 1;
  std::vector<std::vector<ItemFailure>> fails(threads);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned me) {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out.values[i] = fn(i);
      } catch (const std::exception& e) {
        fails[me].push_back({i, e.what()});
      } catch (...) {
        fails[me].push_back({i, "unknown error"});
      }
    }
  };
  if (threads == 1 || n <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  for (auto& f : fails)
    out.failures.insert(out.failures.end(), f.begin(), f.end());
  std::sort(out.failures.begin(), out.failures.end(),
            [](const ItemFailure& a, const ItemFailure& b) { return a.index < b.index; });
  return out;
}

unsigned default_thread_count();

}  // namespace koszul
