#include "clusterconf/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace clusterconf {

int default_thread_count() {
  if (const char* env = std::getenv("CLUSTERCONF_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void parallel_for(std::size_t njobs, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads < 1) threads = 1;
  if (njobs == 0) return;
  if (threads == 1 || njobs == 1) {
    for (std::size_t i = 0; i < njobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= njobs) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), njobs);
  pool.reserve(nworkers);
  for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

} // namespace clusterconf
