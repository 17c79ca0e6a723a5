#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cubetop {

/// Worker count: the --jobs flag, the CUBETOP_JOBS variable, or one.
inline int& job_count() {
  static int jobs = [] {
    if (const char* env = std::getenv("CUBETOP_JOBS")) {
      int j = std::atoi(env);
      if (j > 0) return j;
    }
    return 1;
  }();
  return jobs;
}

/// Index-parallel loop with deterministic results: the body writes only to
/// its own index slot, so the outcome is identical for any worker count.
inline void parallel_for(int n, const std::function<void(int)>& body) {
  int jobs = std::min(job_count(), n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : workers) t.join();
}

}  // namespace cubetop
