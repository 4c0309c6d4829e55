#include "clarkframes/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace clarkframes {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  int budget = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("CLARKFRAMES_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') budget = std::min<long>(budget, std::max(1L, cap));
  }
  return budget;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int workers = std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace clarkframes
