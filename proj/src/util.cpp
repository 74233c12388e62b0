#include "coamoeba/util.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coamoeba {

int worker_threads() {
  if (const char* env = std::getenv("COAMOEBA_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body) {
  int workers = worker_threads();
  if (workers <= 1 || chunks <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= chunks) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace coamoeba
