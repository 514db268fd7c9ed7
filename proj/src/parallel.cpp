#include "approxlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace approxlab {

int max_threads() {
  if (const char* env = std::getenv("APPROXLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, const std::function<void(int)>& body) {
  if (count <= 0) return;
  int nt = std::min(max_threads(), count);
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr err;
  std::mutex err_mx;
  for (int t = 0; t < nt; ++t) {
    int lo = static_cast<int>(static_cast<long long>(count) * t / nt);
    int hi = static_cast<int>(static_cast<long long>(count) * (t + 1) / nt);
    pool.emplace_back([&, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mx);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace approxlab
