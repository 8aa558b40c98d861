#include "mincut/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace mincut {

int worker_count() {
  const char* env = std::getenv("MINCUT_THREADS");
  if (!env) return 1;
  int requested = std::atoi(env);
  if (requested <= 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  return std::min(requested, static_cast<int>(hw == 0 ? 1 : hw));
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace mincut
