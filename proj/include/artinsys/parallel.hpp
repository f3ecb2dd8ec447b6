#ifndef ARTINSYS_PARALLEL_HPP
#define ARTINSYS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace artinsys {

/// Resolves a worker-count request; 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls body(k) for k in [0, count) on up to `workers` threads. Results
/// must go to per-index slots; the first exception (lowest index) is
/// rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) {
      try {
        body(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) {
          try {
            body(k);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace artinsys

#endif  // ARTINSYS_PARALLEL_HPP
