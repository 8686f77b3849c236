#pragma once

#include <cstddef>
#include <functional>

namespace pairshaper {

/// Worker count used by the data-parallel loops. Defaults to the
/// PAIRSHAPER_THREADS environment variable, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Restores the previous worker count on scope exit.
class ThreadCountScope {
 public:
  explicit ThreadCountScope(int n);
  ~ThreadCountScope();
  ThreadCountScope(const ThreadCountScope&) = delete;
  ThreadCountScope& operator=(const ThreadCountScope&) = delete;

 private:
  int previous_;
};

/// Runs body(i) for i in [0, n) over contiguous static chunks. Each index is
/// processed exactly once and writes only its own outputs, so results do not
/// depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pairshaper
