#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace hybisect {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 with hand-rolled distributions. The engine's output sequence is
// pinned by the standard; std::*_distribution is not, and reports have to be
// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed ^ 0x5bf036359b93ae33ULL)) {}

  // Independent substream; used for per-trial / per-chunk determinism.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(splitmix64(seed) ^ splitmix64(stream_id * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  }

  std::uint64_t next_u64() { return eng_(); }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }  // (0,1]
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller; generates pairs, caches the spare.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = uniform_pos();
    double v = uniform01();
    double m = std::sqrt(-2.0 * std::log(u));
    double ang = 6.28318530717958647692 * v;
    spare_ = m * std::sin(ang);
    has_spare_ = true;
    return m * std::cos(ang);
  }

  // Uniform in [0, bound), rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Sorted k-subset of {0,..,n-1} (Floyd's algorithm).
  std::vector<int> sample_subset(int n, int k) {
    std::set<int> chosen;
    for (int j = n - k; j < n; ++j) {
      int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
      if (chosen.count(t))
        chosen.insert(j);
      else
        chosen.insert(t);
    }
    return std::vector<int>(chosen.begin(), chosen.end());
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hybisect
