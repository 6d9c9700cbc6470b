#include "minsmc/exec.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace minsmc {

namespace {

int initial_worker_count() {
  if (const char* env = std::getenv("MINSMC_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::atomic<int>& worker_slot() {
  static std::atomic<int> n{initial_worker_count()};
  return n;
}

}  // namespace

int worker_count() { return worker_slot().load(std::memory_order_relaxed); }

void set_worker_count(int n) {
  worker_slot().store(std::max(1, n), std::memory_order_relaxed);
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const int workers = worker_count();
  if (workers <= 1 || n < 64) {
    fn(0, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, n);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace minsmc
