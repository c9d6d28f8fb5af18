#include "sumprod/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sumprod {

namespace {
std::atomic<int> g_default_jobs{1};
}

int default_jobs() noexcept { return g_default_jobs.load(); }

void set_default_jobs(int jobs) noexcept {
  g_default_jobs.store(std::max(1, jobs));
}

int resolve_jobs(int jobs) noexcept {
  return jobs > 0 ? jobs : default_jobs();
}

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& body) {
  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(n);
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

void parallel_chunks(std::size_t n, std::size_t chunks, int jobs,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, std::max<std::size_t>(n, 1)));
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    body(c, begin, end);
  });
}

}  // namespace sumprod
