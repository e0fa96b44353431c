#pragma once

// Internal helpers shared by the core sources. Not installed.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace symtrig::internal {

// Neumaier compensated accumulation; keeps sums independent of chunking to
// well below 1e-13 relative.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double get() const { return sum + comp; }
};

inline int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SYMTRIG_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) across the thread budget. Work is split into
// fixed-size blocks so that reductions combining per-index results in index
// order are bit-identical for any thread count.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  const int threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([=, &fn] {
      for (int i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Parallel reduction over [0, count): per-index terms are accumulated into
// per-index-order partials and combined sequentially, so the result does not
// depend on the number of threads.
inline double parallel_sum(int count, const std::function<double(int)>& term) {
  std::vector<double> partial(static_cast<size_t>(std::max(count, 0)));
  parallel_for(count, [&](int i) { partial[static_cast<size_t>(i)] = term(i); });
  Accumulator acc;
  for (double v : partial) acc.add(v);
  return acc.get();
}

}  // namespace symtrig::internal
