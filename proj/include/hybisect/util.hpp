#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hybisect {

// Size-limit violations on exhaustive routines; mapped to exit code 3 by the CLI.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric/algorithmic failures (retries exhausted, non-finite values, failed
// identity checks); mapped to exit code 4 by the CLI.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int thread_count() {
  if (const char* env = std::getenv("HYBISECT_THREADS")) {
    int k = std::atoi(env);
    if (k >= 1) return k;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(chunk) for chunk = 0 .. n_chunks-1, distributing chunks statically
// over worker threads. Callers write results into per-chunk slots, so the
// outcome does not depend on scheduling. fn must not throw.
template <typename Fn>
void parallel_chunks(std::size_t n_chunks, Fn&& fn) {
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n_chunks);
  if (nt <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    workers.emplace_back([&fn, t, nt, n_chunks] {
      for (std::size_t c = t; c < n_chunks; c += nt) fn(c);
    });
  }
  for (auto& w : workers) w.join();
}

// Lexicographically next r-combination of {0,..,n-1}; c must be sorted.
// Returns false when c was the last combination.
inline bool next_combination(std::vector<int>& c, int n) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int r) {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  return c;
}

}  // namespace hybisect
