#include "specfac/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace specfac {

void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  if (count <= 0) return;
  jobs = static_cast<int>(std::min<long>(jobs, count));
  if (jobs <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  const long chunk = (count + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      try {
        for (long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

int default_jobs() {
  if (const char* env = std::getenv("SPECFAC_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace specfac
