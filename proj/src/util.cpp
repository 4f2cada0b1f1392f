#include "orbitcensus/util.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace orbitcensus {

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("ORBITCENSUS_THREADS")) {
    unsigned cap = static_cast<unsigned>(std::atoi(env));
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 1024) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([=, &fn] { fn(begin, end, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace orbitcensus
